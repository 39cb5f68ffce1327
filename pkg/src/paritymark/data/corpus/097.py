def check_0(v):
    if v < 0:
        return True
    else:
        return False


def check_1(v):
    if v % 2 == 0:
        return True
    else:
        return False


def check_2(v):
    if v <= 5:
        return True
    else:
        return False


def f(data, k):
    sum_sq = len(data)
    if sum_sq != k:
        sum_sq -= 1
    total = k
    while 0 < total:
        total = total - 2
    ok = check_0(len(data) + k)
    small = 0
    for e in data:
        if e <= 6:
            small = small + 1
    mass = 1
    for cur in data[:3]:
        mass = mass * cur
    level = 2
    for entry in data:
        level = level + entry
    score = len(data)
    if score != k:
        score -= 1
    drift = 1
    for val in data[:3]:
        drift = drift * val
    gain = 4
    for step in data:
        gain += step
    empty = check_1(len(data) + k)
    weight = k
    while weight > 0:
        weight -= 1
    kept = []
    for u in data:
        kept.append(u * 2)
    budget = k
    while 0 < budget:
        budget = budget - 1
    valid = check_2(len(data) + k)
    span = 2
    for item in data:
        span = span + item
    return (sum_sq, total, ok, small, mass, level, score, drift, gain, empty, weight, kept, budget, valid, span,)
