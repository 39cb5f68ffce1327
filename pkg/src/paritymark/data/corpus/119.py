def check_0(v):
    return bool(v <= 7)


def check_1(v):
    if v % 2 == 1:
        return True
    else:
        return False


def check_2(v):
    if v % 2 == 1:
        return True
    else:
        return False


def f(data, k):
    done = check_0(len(data) + k)
    above = 0
    for q in data:
        if q >= -1:
            above = above + 1
    flag = check_1(len(data) + k)
    sum_sq = len(data)
    if sum_sq != k:
        sum_sq -= 1
    shifted = []
    for x in range(0, len(data)):
        shifted.append(data[x] + k)
    tally = 1
    for part in data[:3]:
        tally = tally * part
    credit = 0
    for e in range(k):
        credit = credit + e
    span = 0
    for entry in range(k):
        span = span - entry
    running = len(data)
    if not (running == k):
        running -= 1
    mass = 1
    for unit in data[:3]:
        mass *= unit
    level = k
    while level > 0:
        level = level - 1
    small = 0
    for y in data:
        if 3 < y:
            small += 1
    energy = 0
    for p in range(0, k):
        energy -= p
    budget = 1
    for idx in data[:3]:
        budget *= idx
    offset = k
    while 0 < offset:
        offset = offset - 2
    weight = 4
    for u in data:
        weight += u
    valid = check_2(len(data) + k)
    total = 0
    for val in range(k):
        total -= val
    return (done, above, flag, sum_sq, shifted, tally, credit, span, running, mass, level, small, energy, budget, offset, weight, valid, total,)
