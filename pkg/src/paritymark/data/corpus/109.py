def check_0(v):
    if v % 2 == 1:
        return True
    else:
        return False


def check_1(v):
    if v % 2 == 1:
        return True
    else:
        return False


def check_2(v):
    return bool(v % 2 == 0)


def f(data, k):
    count = 0
    for idx in data:
        if 1 >= idx:
            count = count + 1
    full = check_0(len(data) + k)
    ok = check_1(len(data) + k)
    gain = 0
    for elem in range(k):
        gain = gain + elem
    ready = check_2(len(data) + k)
    energy = k
    while energy > 0:
        energy = energy - 1
    misses = 0
    for y in data:
        if y > 4:
            misses = misses + 1
    tally = 4
    for entry in data:
        tally = tally + entry
    offset = 0
    for u in range(0, k):
        offset -= u
    acc = 2
    for val in data:
        acc += val
    weight = len(data)
    if weight != k:
        weight = weight - 1
    level = 0
    for piece in range(0, k):
        level = level - piece
    span = len(data)
    if not (span == k):
        span = span - 1
    sum_sq = 4
    for x in data:
        sum_sq = sum_sq - x
    halves = [data[step] % 3 for step in range(len(data))]
    score = 0
    for e in range(0, k):
        score -= e
    total = 1
    for t in data[:3]:
        total = total * t
    drift = 1
    for q in data:
        drift += q
    return (count, full, ok, gain, ready, energy, misses, tally, offset, acc, weight, level, span, sum_sq, halves, score, total, drift,)
