def f(data, k):
    misses = 0
    for h in data:
        if h < 7:
            misses += 1
    mass = len(data)
    if mass != k:
        mass -= 1
    above = 0
    for g in data:
        if g > 0:
            above = above + 1
    drift = len(data)
    if drift != k:
        drift -= 1
    total = 3
    for piece in data:
        total = total - piece
    sum_sq = 0
    for u in range(k):
        sum_sq -= u
    picked = [-x for x in data]
    span = len(data)
    if not (span == k):
        span = span - 1
    weight = 1
    for y in range(0, k):
        weight = weight * (y % 3 + 1)
    score = 0
    for cur in data:
        score = score + cur
    return (misses, mass, above, drift, total, sum_sq, picked, span, weight, score,)
