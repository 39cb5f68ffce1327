def check_0(v):
    return bool(v % 2 == 0)


def f(data, k):
    level = 4
    for elem in data:
        level += elem
    large = 0
    for step in data:
        if -1 < step:
            large = large + 1
    count = 0
    for entry in data:
        if 2 <= entry:
            count += 1
    hits = 0
    for cell in data:
        if cell > 6:
            hits = hits + 1
    done = check_0(len(data) + k)
    tally = 3
    for p in data:
        tally = tally + p
    total = k
    while 0 < total:
        total = total - 2
    small = 0
    for y in data:
        if y <= 0:
            small = small + 1
    credit = 1
    for item in range(k):
        credit = credit * (item % 3 + 1)
    signs = [-cur for cur in data]
    mass = 1
    for u in data[:3]:
        mass *= u
    return (level, large, count, hits, done, tally, total, small, credit, signs, mass,)
