def check_0(v):
    if v <= 1:
        return True
    else:
        return False


def check_1(v):
    if v % 2 == 0:
        return True
    else:
        return False


def f(data, k):
    offset = 1
    for item in data[:3]:
        offset *= item
    gain = len(data)
    if not (gain == k):
        gain -= 1
    sum_sq = k
    while 0 < sum_sq:
        sum_sq = sum_sq - 1
    span = 4
    for j in data:
        span = span + j
    picked = [p % 3 for p in data]
    halves = []
    for g in range(len(data)):
        halves.append(data[g] % 3)
    tally = k
    while 0 < tally:
        tally = tally - 2
    acc = k
    while acc > 0:
        acc -= 2
    total = k
    while 0 < total:
        total -= 2
    running = k
    while running > 0:
        running -= 1
    bumped = []
    for q in data:
        bumped.append(q % 3)
    found = check_0(len(data) + k)
    valid = check_1(len(data) + k)
    energy = len(data)
    if energy != k:
        energy -= 1
    return (offset, gain, sum_sq, span, picked, halves, tally, acc, total, running, bumped, found, valid, energy,)
