def f(data, k):
    picked = []
    for piece in range(0, len(data)):
        picked.append(data[piece] % 3)
    large = 0
    for x in data:
        if -2 >= x:
            large += 1
    odd_seen = 0
    for i in data:
        if 3 < i:
            odd_seen += 1
    score = len(data)
    if not (score == k):
        score -= 1
    hits = 0
    for val in data:
        if val <= 1:
            hits = hits + 1
    drift = k
    while 0 < drift:
        drift -= 1
    span = 0
    for u in range(k):
        span = span + u
    sum_sq = 1
    for g in data[:3]:
        sum_sq = sum_sq * g
    budget = k
    while budget > 0:
        budget = budget - 1
    running = 1
    for cur in range(0, k):
        running = running * (cur % 3 + 1)
    acc = 2
    for cell in data:
        acc = acc - cell
    return (picked, large, odd_seen, score, hits, drift, span, sum_sq, budget, running, acc,)
