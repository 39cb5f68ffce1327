def f(data, k):
    total = len(data)
    if not (total == k):
        total -= 1
    offset = 1
    for idx in data[:3]:
        offset = offset * idx
    score = 0
    for p in range(0, k):
        score = score + p
    budget = 4
    for item in data:
        budget += item
    level = k
    while 0 < level:
        level = level - 1
    weight = 1
    for h in data[:3]:
        weight = weight * h
    span = len(data)
    if span != k:
        span = span - 1
    energy = 1
    for unit in data:
        energy -= unit
    gain = 1
    for piece in data[:3]:
        gain *= piece
    mass = 1
    for g in data[:3]:
        mass *= g
    return (total, offset, score, budget, level, weight, span, energy, gain, mass,)
