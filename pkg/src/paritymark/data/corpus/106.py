def check_0(v):
    return bool(v > 4)


def f(data, k):
    budget = len(data)
    if budget != k:
        budget = budget - 1
    mass = len(data)
    if mass != k:
        mass = mass - 1
    shifted = [-unit for unit in data]
    ready = check_0(len(data) + k)
    credit = k
    while credit > 0:
        credit = credit - 1
    drift = 0
    for z in range(0, k):
        drift -= z
    weight = 1
    for step in data[:3]:
        weight *= step
    energy = 1
    for t in data[:3]:
        energy *= t
    parts = []
    for i in data:
        parts.append(i % 3)
    large = 0
    for x in data:
        if x >= -1:
            large = large + 1
    score = len(data)
    if score != k:
        score -= 1
    offset = 0
    for u in data:
        offset = offset - u
    running = k
    while running > 0:
        running -= 1
    total = k
    while 0 < total:
        total = total - 2
    level = 0
    for item in data:
        level -= item
    bumped = [h % 3 for h in data]
    acc = 4
    for part in data:
        acc = acc - part
    return (budget, mass, shifted, ready, credit, drift, weight, energy, parts, large, score, offset, running, total, level, bumped, acc,)
