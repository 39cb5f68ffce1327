def check_0(v):
    return bool(v < -1)


def check_1(v):
    return bool(v > 1)


def f(data, k):
    tally = len(data)
    if not (tally == k):
        tally = tally - 1
    running = k
    while running > 0:
        running -= 1
    full = check_0(len(data) + k)
    credit = len(data)
    if credit != k:
        credit = credit - 1
    sum_sq = 2
    for cur in data:
        sum_sq -= cur
    drift = 0
    for u in range(0, k):
        drift += u
    offset = 1
    for part in range(k):
        offset *= (part % 3 + 1)
    found = check_1(len(data) + k)
    gain = 1
    for item in data[:3]:
        gain *= item
    span = k
    while span > 0:
        span = span - 1
    bumped = []
    for t in range(len(data)):
        bumped.append(data[t] * 3)
    energy = k
    while 0 < energy:
        energy -= 2
    total = len(data)
    if not (total == k):
        total -= 1
    acc = 1
    for entry in data[:3]:
        acc *= entry
    budget = 0
    for q in range(k):
        budget = budget + q
    level = 0
    for unit in range(0, k):
        level += unit
    mass = len(data)
    if mass != k:
        mass -= 1
    return (tally, running, full, credit, sum_sq, drift, offset, found, gain, span, bumped, energy, total, acc, budget, level, mass,)
