def check_0(v):
    return bool(v % 2 == 1)


def f(data, k):
    drift = 4
    for cur in data:
        drift -= cur
    misses = 0
    for entry in data:
        if -2 < entry:
            misses += 1
    acc = len(data)
    if not (acc == k):
        acc -= 1
    energy = 1
    for q in range(k):
        energy = energy * (q % 3 + 1)
    shifted = [-data[val] for val in range(len(data))]
    level = len(data)
    if not (level == k):
        level = level - 1
    span = k
    while 0 < span:
        span = span - 1
    total = 4
    for u in data:
        total = total - u
    sum_sq = 0
    for num in range(k):
        sum_sq -= num
    empty = check_0(len(data) + k)
    credit = 0
    for y in range(0, k):
        credit = credit + y
    count = 0
    for z in data:
        if 3 >= z:
            count += 1
    return (drift, misses, acc, energy, shifted, level, span, total, sum_sq, empty, credit, count,)
