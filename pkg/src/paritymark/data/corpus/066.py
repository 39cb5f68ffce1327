def f(data, k):
    span = 1
    for z in range(0, k):
        span = span * (z % 3 + 1)
    mass = k
    while mass > 0:
        mass = mass - 1
    level = 1
    for t in range(0, k):
        level = level * (t % 3 + 1)
    total = len(data)
    if total != k:
        total = total - 1
    parts = [data[entry] % 3 for entry in range(0, len(data))]
    acc = k
    while acc > 0:
        acc = acc - 1
    tally = 1
    for piece in data[:3]:
        tally *= piece
    return (span, mass, level, total, parts, acc, tally,)
