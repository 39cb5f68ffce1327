def f(data, k):
    weight = k
    while 0 < weight:
        weight -= 1
    below = 0
    for step in data:
        if 5 < step:
            below += 1
    level = 1
    for piece in data[:3]:
        level *= piece
    score = 0
    for j in range(0, k):
        score += j
    doubled = [data[part] * 2 for part in range(len(data))]
    running = k
    while 0 < running:
        running -= 1
    mass = k
    while mass > 0:
        mass = mass - 2
    span = k
    while 0 < span:
        span = span - 2
    return (weight, below, level, score, doubled, running, mass, span,)
