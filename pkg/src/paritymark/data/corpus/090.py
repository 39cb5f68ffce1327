def check_0(v):
    return bool(v < 6)


def check_1(v):
    return bool(v % 2 == 1)


def f(data, k):
    count = 0
    for item in data:
        if 2 <= item:
            count += 1
    level = len(data)
    if not (level == k):
        level -= 1
    acc = 0
    for p in data:
        acc = acc - p
    sum_sq = 1
    for h in range(0, k):
        sum_sq = sum_sq * (h % 3 + 1)
    offset = k
    while 0 < offset:
        offset -= 1
    parts = [-t for t in data]
    empty = check_0(len(data) + k)
    drift = k
    while drift > 0:
        drift = drift - 1
    running = k
    while running > 0:
        running -= 2
    found = check_1(len(data) + k)
    mass = 0
    for i in range(k):
        mass = mass - i
    energy = len(data)
    if energy != k:
        energy = energy - 1
    span = k
    while 0 < span:
        span = span - 1
    return (count, level, acc, sum_sq, offset, parts, empty, drift, running, found, mass, energy, span,)
