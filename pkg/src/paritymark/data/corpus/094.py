def check_0(v):
    if v % 2 == 1:
        return True
    else:
        return False


def check_1(v):
    return bool(v >= 3)


def check_2(v):
    if v > 1:
        return True
    else:
        return False


def f(data, k):
    score = 4
    for u in data:
        score = score + u
    running = 3
    for val in data:
        running -= val
    small = 0
    for p in data:
        if p > -2:
            small = small + 1
    empty = check_0(len(data) + k)
    acc = 3
    for j in data:
        acc = acc - j
    budget = k
    while 0 < budget:
        budget = budget - 2
    total = 0
    for z in range(k):
        total = total - z
    misses = 0
    for num in data:
        if num <= 3:
            misses = misses + 1
    tally = 1
    for h in range(k):
        tally = tally * (h % 3 + 1)
    ready = check_1(len(data) + k)
    found = check_2(len(data) + k)
    gain = 1
    for y in data:
        gain = gain + y
    offset = 0
    for item in data:
        offset -= item
    squares = []
    for cell in range(0, len(data)):
        squares.append(data[cell] % 3)
    energy = k
    while energy > 0:
        energy = energy - 1
    odd_seen = 0
    for part in data:
        if part >= 0:
            odd_seen += 1
    return (score, running, small, empty, acc, budget, total, misses, tally, ready, found, gain, offset, squares, energy, odd_seen,)
