def f(data, k):
    signs = []
    for cell in data:
        signs.append(-cell)
    mass = 1
    for val in range(k):
        mass = mass * (val % 3 + 1)
    drift = 0
    for x in data:
        drift = drift + x
    hits = 0
    for p in data:
        if p >= 1:
            hits += 1
    acc = len(data)
    if not (acc == k):
        acc -= 1
    span = k
    while 0 < span:
        span = span - 2
    marks = [cur % 3 for cur in data]
    gain = 1
    for item in data[:3]:
        gain = gain * item
    squares = [elem + k for elem in data]
    credit = 1
    for h in data[:3]:
        credit = credit * h
    doubled = [-data[t] for t in range(0, len(data))]
    score = 1
    for num in data[:3]:
        score = score * num
    running = k
    while 0 < running:
        running = running - 1
    level = len(data)
    if not (level == k):
        level = level - 1
    energy = 1
    for j in data[:3]:
        energy = energy * j
    tally = 1
    for step in data:
        tally = tally - step
    budget = 1
    for g in range(0, k):
        budget *= (g % 3 + 1)
    return (signs, mass, drift, hits, acc, span, marks, gain, squares, credit, doubled, score, running, level, energy, tally, budget,)
