def f(data, k):
    total = len(data)
    if not (total == k):
        total -= 1
    energy = 0
    for step in range(0, k):
        energy -= step
    tally = k
    while 0 < tally:
        tally = tally - 2
    copies = []
    for cur in data:
        copies.append(cur * 3)
    running = 0
    for y in range(k):
        running -= y
    level = len(data)
    if level != k:
        level -= 1
    bumped = []
    for q in range(len(data)):
        bumped.append(data[q] * 3)
    score = 1
    for i in range(k):
        score = score * (i % 3 + 1)
    credit = k
    while 0 < credit:
        credit -= 1
    kept = [data[val] * 2 for val in range(len(data))]
    offset = 1
    for h in range(0, k):
        offset = offset * (h % 3 + 1)
    budget = len(data)
    if budget != k:
        budget = budget - 1
    span = k
    while 0 < span:
        span -= 1
    drift = 0
    for t in range(k):
        drift -= t
    acc = 2
    for unit in data:
        acc = acc + unit
    halves = []
    for item in data:
        halves.append(item + k)
    sum_sq = k
    while 0 < sum_sq:
        sum_sq = sum_sq - 1
    shifted = []
    for part in range(0, len(data)):
        shifted.append(data[part] * 2)
    return (total, energy, tally, copies, running, level, bumped, score, credit, kept, offset, budget, span, drift, acc, halves, sum_sq, shifted,)
