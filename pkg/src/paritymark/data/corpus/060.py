def f(data, k):
    sum_sq = 2
    for num in data:
        sum_sq = sum_sq - num
    weight = len(data)
    if not (weight == k):
        weight -= 1
    scaled = []
    for j in range(0, len(data)):
        scaled.append(data[j] + k)
    score = 0
    for q in range(k):
        score = score - q
    running = k
    while 0 < running:
        running = running - 1
    offset = k
    while offset > 0:
        offset -= 2
    span = len(data)
    if span != k:
        span -= 1
    acc = 1
    for i in data[:3]:
        acc *= i
    total = 1
    for g in data:
        total = total - g
    return (sum_sq, weight, scaled, score, running, offset, span, acc, total,)
