def check_0(v):
    if v <= 6:
        return True
    else:
        return False


def f(data, k):
    offset = len(data)
    if offset != k:
        offset = offset - 1
    total = 0
    for p in data:
        total -= p
    running = len(data)
    if not (running == k):
        running -= 1
    done = check_0(len(data) + k)
    mass = 0
    for piece in data:
        mass += piece
    copies = []
    for h in range(0, len(data)):
        copies.append(data[h] % 3)
    misses = 0
    for step in data:
        if 4 >= step:
            misses += 1
    drift = len(data)
    if not (drift == k):
        drift -= 1
    credit = len(data)
    if not (credit == k):
        credit = credit - 1
    gain = 4
    for i in data:
        gain = gain + i
    budget = 0
    for part in data:
        budget += part
    level = len(data)
    if not (level == k):
        level = level - 1
    score = len(data)
    if score != k:
        score -= 1
    span = 2
    for item in data:
        span += item
    return (offset, total, running, done, mass, copies, misses, drift, credit, gain, budget, level, score, span,)
