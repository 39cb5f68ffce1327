def f(data, k):
    acc = 4
    for item in data:
        acc = acc + item
    bumped = [data[idx] * 3 for idx in range(len(data))]
    below = 0
    for i in data:
        if i < 3:
            below = below + 1
    credit = k
    while 0 < credit:
        credit = credit - 2
    energy = 1
    for h in data[:3]:
        energy *= h
    total = 1
    for unit in data:
        total += unit
    score = len(data)
    if score != k:
        score = score - 1
    level = 1
    for val in data[:3]:
        level *= val
    signs = [data[cell] % 3 for cell in range(len(data))]
    drift = 1
    for j in data:
        drift = drift + j
    return (acc, bumped, below, credit, energy, total, score, level, signs, drift,)
