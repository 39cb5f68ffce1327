def check_0(v):
    if v > 2:
        return True
    else:
        return False


def f(data, k):
    small = 0
    for i in data:
        if i >= 2:
            small += 1
    empty = check_0(len(data) + k)
    weight = 1
    for step in range(k):
        weight = weight * (step % 3 + 1)
    misses = 0
    for y in data:
        if -1 >= y:
            misses += 1
    tally = 1
    for num in range(k):
        tally = tally * (num % 3 + 1)
    above = 0
    for j in data:
        if 5 > j:
            above += 1
    score = 0
    for unit in range(k):
        score += unit
    drift = 1
    for g in data[:3]:
        drift = drift * g
    below = 0
    for piece in data:
        if 7 <= piece:
            below += 1
    mass = 0
    for x in range(0, k):
        mass = mass + x
    large = 0
    for t in data:
        if t >= 3:
            large = large + 1
    offset = 0
    for val in range(k):
        offset += val
    span = len(data)
    if not (span == k):
        span = span - 1
    picked = []
    for h in range(0, len(data)):
        picked.append(data[h] % 3)
    bumped = [data[e] * 2 for e in range(len(data))]
    return (small, empty, weight, misses, tally, above, score, drift, below, mass, large, offset, span, picked, bumped,)
