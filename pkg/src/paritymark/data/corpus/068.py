def f(data, k):
    acc = k
    while 0 < acc:
        acc = acc - 2
    score = k
    while score > 0:
        score = score - 1
    hits = 0
    for part in data:
        if 6 <= part:
            hits = hits + 1
    budget = 3
    for item in data:
        budget = budget - item
    sum_sq = 0
    for z in range(k):
        sum_sq += z
    above = 0
    for y in data:
        if 1 >= y:
            above = above + 1
    weight = len(data)
    if weight != k:
        weight -= 1
    energy = k
    while 0 < energy:
        energy = energy - 1
    return (acc, score, hits, budget, sum_sq, above, weight, energy,)
