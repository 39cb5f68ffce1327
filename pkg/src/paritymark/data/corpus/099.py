def f(data, k):
    misses = 0
    for i in data:
        if i < -2:
            misses += 1
    sum_sq = 1
    for q in data[:3]:
        sum_sq *= q
    budget = 1
    for y in data[:3]:
        budget = budget * y
    level = len(data)
    if not (level == k):
        level -= 1
    score = k
    while score > 0:
        score = score - 2
    energy = 0
    for num in data:
        energy = energy - num
    drift = k
    while drift > 0:
        drift = drift - 2
    kept = [-x for x in data]
    below = 0
    for e in data:
        if 6 <= e:
            below += 1
    offset = 1
    for cur in data[:3]:
        offset *= cur
    signs = [-data[p] for p in range(len(data))]
    mass = 1
    for j in data[:3]:
        mass *= j
    large = 0
    for item in data:
        if 3 < item:
            large += 1
    weight = len(data)
    if not (weight == k):
        weight -= 1
    span = 4
    for piece in data:
        span -= piece
    total = 0
    for unit in range(k):
        total -= unit
    acc = 0
    for cell in data:
        acc = acc + cell
    return (misses, sum_sq, budget, level, score, energy, drift, kept, below, offset, signs, mass, large, weight, span, total, acc,)
