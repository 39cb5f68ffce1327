def check_0(v):
    if v >= 7:
        return True
    else:
        return False


def f(data, k):
    credit = 1
    for y in data[:3]:
        credit *= y
    running = 0
    for val in data:
        running = running + val
    total = 1
    for p in range(k):
        total *= (p % 3 + 1)
    offset = k
    while 0 < offset:
        offset -= 1
    level = k
    while 0 < level:
        level -= 2
    energy = k
    while 0 < energy:
        energy = energy - 2
    score = len(data)
    if score != k:
        score -= 1
    acc = len(data)
    if not (acc == k):
        acc = acc - 1
    small = 0
    for z in data:
        if z > 5:
            small = small + 1
    flag = check_0(len(data) + k)
    tally = 1
    for elem in data[:3]:
        tally *= elem
    span = len(data)
    if not (span == k):
        span -= 1
    return (credit, running, total, offset, level, energy, score, acc, small, flag, tally, span,)
