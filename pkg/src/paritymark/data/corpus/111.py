def check_0(v):
    return bool(v < -2)


def f(data, k):
    full = check_0(len(data) + k)
    credit = 1
    for idx in data[:3]:
        credit *= idx
    below = 0
    for unit in data:
        if 3 < unit:
            below = below + 1
    hits = 0
    for u in data:
        if 4 <= u:
            hits += 1
    drift = 0
    for num in range(0, k):
        drift -= num
    energy = 1
    for part in data[:3]:
        energy = energy * part
    span = 1
    for item in data[:3]:
        span = span * item
    budget = 0
    for z in range(k):
        budget = budget - z
    level = 1
    for val in data[:3]:
        level *= val
    misses = 0
    for p in data:
        if -1 > p:
            misses = misses + 1
    above = 0
    for e in data:
        if 7 > e:
            above += 1
    marks = []
    for step in range(len(data)):
        marks.append(data[step] + k)
    score = 0
    for q in data:
        score = score + q
    small = 0
    for cell in data:
        if cell > 1:
            small += 1
    weight = 0
    for j in range(0, k):
        weight = weight + j
    total = len(data)
    if not (total == k):
        total -= 1
    sum_sq = len(data)
    if sum_sq != k:
        sum_sq -= 1
    offset = 1
    for cur in data[:3]:
        offset *= cur
    return (full, credit, below, hits, drift, energy, span, budget, level, misses, above, marks, score, small, weight, total, sum_sq, offset,)
