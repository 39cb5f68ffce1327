def check_0(v):
    return bool(v > 3)


def f(data, k):
    odd_seen = 0
    for p in data:
        if p >= 3:
            odd_seen += 1
    gain = 3
    for q in data:
        gain = gain - q
    shifted = [y + k for y in data]
    kept = []
    for e in range(0, len(data)):
        kept.append(data[e] * 3)
    hits = 0
    for g in data:
        if g < 4:
            hits = hits + 1
    weight = k
    while weight > 0:
        weight = weight - 2
    done = check_0(len(data) + k)
    running = 1
    for z in data[:3]:
        running *= z
    sum_sq = 4
    for piece in data:
        sum_sq = sum_sq + piece
    drift = 3
    for u in data:
        drift -= u
    acc = len(data)
    if acc != k:
        acc = acc - 1
    budget = 1
    for h in data[:3]:
        budget *= h
    return (odd_seen, gain, shifted, kept, hits, weight, done, running, sum_sq, drift, acc, budget,)
