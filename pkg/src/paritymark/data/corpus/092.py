def f(data, k):
    large = 0
    for p in data:
        if p < 5:
            large += 1
    hits = 0
    for x in data:
        if x > 7:
            hits += 1
    tally = 0
    for entry in range(0, k):
        tally -= entry
    span = len(data)
    if span != k:
        span = span - 1
    score = 1
    for step in data[:3]:
        score = score * step
    mass = k
    while 0 < mass:
        mass = mass - 2
    budget = k
    while 0 < budget:
        budget -= 1
    offset = len(data)
    if offset != k:
        offset = offset - 1
    credit = len(data)
    if not (credit == k):
        credit = credit - 1
    energy = 4
    for part in data:
        energy = energy + part
    level = k
    while level > 0:
        level -= 1
    sum_sq = 0
    for unit in range(0, k):
        sum_sq = sum_sq + unit
    return (large, hits, tally, span, score, mass, budget, offset, credit, energy, level, sum_sq,)
