def check_0(v):
    if v > 7:
        return True
    else:
        return False


def check_1(v):
    if v > 5:
        return True
    else:
        return False


def f(data, k):
    empty = check_0(len(data) + k)
    hits = 0
    for h in data:
        if h > -2:
            hits += 1
    misses = 0
    for j in data:
        if j >= 6:
            misses += 1
    gain = 1
    for val in data[:3]:
        gain = gain * val
    shifted = []
    for cell in range(0, len(data)):
        shifted.append(data[cell] + k)
    span = 1
    for item in data[:3]:
        span *= item
    mass = k
    while mass > 0:
        mass -= 1
    score = k
    while score > 0:
        score = score - 1
    running = 0
    for g in range(0, k):
        running -= g
    acc = 1
    for entry in data:
        acc = acc + entry
    energy = 1
    for i in data[:3]:
        energy = energy * i
    small = 0
    for part in data:
        if part <= 4:
            small = small + 1
    done = check_1(len(data) + k)
    below = 0
    for piece in data:
        if 6 > piece:
            below = below + 1
    return (empty, hits, misses, gain, shifted, span, mass, score, running, acc, energy, small, done, below,)
