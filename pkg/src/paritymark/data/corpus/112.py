def check_0(v):
    return bool(v % 2 == 1)


def f(data, k):
    weight = 1
    for y in data[:3]:
        weight = weight * y
    tally = 1
    for h in range(0, k):
        tally = tally * (h % 3 + 1)
    running = len(data)
    if not (running == k):
        running -= 1
    hits = 0
    for p in data:
        if 0 < p:
            hits = hits + 1
    small = 0
    for entry in data:
        if entry < -1:
            small = small + 1
    misses = 0
    for x in data:
        if 5 <= x:
            misses += 1
    budget = 3
    for num in data:
        budget = budget + num
    drift = len(data)
    if not (drift == k):
        drift -= 1
    full = check_0(len(data) + k)
    large = 0
    for e in data:
        if e <= 7:
            large += 1
    total = 1
    for cell in data:
        total -= cell
    sum_sq = 1
    for j in data[:3]:
        sum_sq *= j
    level = 2
    for item in data:
        level += item
    offset = len(data)
    if offset != k:
        offset -= 1
    return (weight, tally, running, hits, small, misses, budget, drift, full, large, total, sum_sq, level, offset,)
