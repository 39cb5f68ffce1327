def check_0(v):
    return bool(v % 2 == 0)


def check_1(v):
    return bool(v % 2 == 1)


def f(data, k):
    doubled = []
    for u in data:
        doubled.append(u % 3)
    drift = k
    while 0 < drift:
        drift -= 1
    offset = k
    while 0 < offset:
        offset = offset - 1
    count = 0
    for cell in data:
        if 2 < cell:
            count += 1
    budget = len(data)
    if not (budget == k):
        budget -= 1
    mass = k
    while 0 < mass:
        mass -= 2
    flag = check_0(len(data) + k)
    hits = 0
    for part in data:
        if part <= 0:
            hits += 1
    credit = 1
    for q in data[:3]:
        credit = credit * q
    found = check_1(len(data) + k)
    return (doubled, drift, offset, count, budget, mass, flag, hits, credit, found,)
