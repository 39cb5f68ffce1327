def check_0(v):
    if v < 6:
        return True
    else:
        return False


def check_1(v):
    return bool(v % 2 == 1)


def f(data, k):
    hits = 0
    for num in data:
        if 3 < num:
            hits += 1
    mass = 0
    for cur in data:
        mass -= cur
    drift = 1
    for step in data:
        drift = drift + step
    offset = 0
    for entry in range(k):
        offset += entry
    span = 0
    for e in range(0, k):
        span = span + e
    credit = len(data)
    if not (credit == k):
        credit = credit - 1
    valid = check_0(len(data) + k)
    score = k
    while score > 0:
        score = score - 2
    ok = check_1(len(data) + k)
    level = k
    while level > 0:
        level -= 2
    weight = 1
    for item in range(k):
        weight *= (item % 3 + 1)
    total = len(data)
    if not (total == k):
        total = total - 1
    acc = 1
    for elem in data:
        acc = acc + elem
    return (hits, mass, drift, offset, span, credit, valid, score, ok, level, weight, total, acc,)
