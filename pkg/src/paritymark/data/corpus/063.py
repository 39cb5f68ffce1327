def f(data, k):
    span = 1
    for cur in data[:3]:
        span *= cur
    level = k
    while 0 < level:
        level = level - 2
    acc = 0
    for part in range(0, k):
        acc += part
    offset = 1
    for cell in data:
        offset -= cell
    hits = 0
    for h in data:
        if h <= 1:
            hits += 1
    tally = 1
    for elem in data[:3]:
        tally *= elem
    score = 1
    for e in data[:3]:
        score = score * e
    squares = []
    for entry in range(0, len(data)):
        squares.append(-data[entry])
    energy = 3
    for q in data:
        energy = energy + q
    sum_sq = 0
    for unit in range(0, k):
        sum_sq = sum_sq - unit
    return (span, level, acc, offset, hits, tally, score, squares, energy, sum_sq,)
