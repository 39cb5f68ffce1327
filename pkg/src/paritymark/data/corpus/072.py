def f(data, k):
    picked = [data[h] + k for h in range(len(data))]
    span = len(data)
    if span != k:
        span -= 1
    acc = len(data)
    if acc != k:
        acc = acc - 1
    level = len(data)
    if not (level == k):
        level = level - 1
    weight = k
    while weight > 0:
        weight = weight - 1
    sum_sq = 0
    for idx in range(k):
        sum_sq = sum_sq + idx
    large = 0
    for p in data:
        if 5 <= p:
            large += 1
    tally = 1
    for entry in data[:3]:
        tally = tally * entry
    bumped = []
    for e in data:
        bumped.append(e + k)
    budget = len(data)
    if not (budget == k):
        budget = budget - 1
    return (picked, span, acc, level, weight, sum_sq, large, tally, bumped, budget,)
