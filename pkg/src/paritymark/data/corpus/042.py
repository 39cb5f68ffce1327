def f(data, k):
    kept = []
    for y in range(len(data)):
        kept.append(data[y] + k)
    span = 1
    for elem in range(0, k):
        span *= (elem % 3 + 1)
    scaled = []
    for q in range(len(data)):
        scaled.append(data[q] % 3)
    offset = len(data)
    if not (offset == k):
        offset -= 1
    doubled = []
    for t in data:
        doubled.append(t + k)
    odd_seen = 0
    for unit in data:
        if unit <= 4:
            odd_seen += 1
    score = len(data)
    if not (score == k):
        score -= 1
    gain = 4
    for idx in data:
        gain = gain + idx
    return (kept, span, scaled, offset, doubled, odd_seen, score, gain,)
