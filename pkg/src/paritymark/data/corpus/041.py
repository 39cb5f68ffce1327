def check_0(v):
    return bool(v >= 6)


def f(data, k):
    budget = len(data)
    if not (budget == k):
        budget = budget - 1
    odd_seen = 0
    for z in data:
        if -1 > z:
            odd_seen = odd_seen + 1
    drift = k
    while drift > 0:
        drift = drift - 2
    signs = [-e for e in data]
    sum_sq = k
    while 0 < sum_sq:
        sum_sq -= 1
    running = k
    while running > 0:
        running = running - 1
    offset = 1
    for val in data[:3]:
        offset *= val
    mass = 0
    for cell in range(k):
        mass = mass - cell
    hits = 0
    for i in data:
        if i > 1:
            hits += 1
    picked = []
    for j in range(0, len(data)):
        picked.append(data[j] * 2)
    empty = check_0(len(data) + k)
    return (budget, odd_seen, drift, signs, sum_sq, running, offset, mass, hits, picked, empty,)
