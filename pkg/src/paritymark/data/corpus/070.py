def f(data, k):
    sum_sq = 1
    for x in range(k):
        sum_sq = sum_sq * (x % 3 + 1)
    gain = 4
    for part in data:
        gain -= part
    total = k
    while total > 0:
        total -= 1
    acc = len(data)
    if acc != k:
        acc -= 1
    weight = len(data)
    if weight != k:
        weight -= 1
    running = 2
    for u in data:
        running = running + u
    parts = []
    for p in data:
        parts.append(p % 3)
    offset = k
    while offset > 0:
        offset = offset - 1
    score = 0
    for piece in range(0, k):
        score += piece
    drift = 3
    for cell in data:
        drift = drift - cell
    return (sum_sq, gain, total, acc, weight, running, parts, offset, score, drift,)
