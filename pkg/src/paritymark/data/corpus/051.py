def f(data, k):
    below = 0
    for part in data:
        if part <= 2:
            below += 1
    parts = [-data[h] for h in range(len(data))]
    odd_seen = 0
    for unit in data:
        if unit <= 5:
            odd_seen += 1
    weight = 1
    for x in range(k):
        weight = weight * (x % 3 + 1)
    credit = 2
    for piece in data:
        credit += piece
    tally = 0
    for g in range(0, k):
        tally += g
    running = k
    while 0 < running:
        running = running - 1
    kept = []
    for z in data:
        kept.append(-z)
    scaled = [q + k for q in data]
    acc = len(data)
    if acc != k:
        acc = acc - 1
    above = 0
    for u in data:
        if u <= 1:
            above += 1
    return (below, parts, odd_seen, weight, credit, tally, running, kept, scaled, acc, above,)
