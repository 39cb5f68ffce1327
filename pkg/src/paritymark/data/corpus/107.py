def check_0(v):
    return bool(v >= 4)


def check_1(v):
    if v <= 2:
        return True
    else:
        return False


def check_2(v):
    if v >= 1:
        return True
    else:
        return False


def f(data, k):
    weight = 1
    for elem in data[:3]:
        weight = weight * elem
    offset = 0
    for q in range(k):
        offset = offset - q
    budget = 4
    for unit in data:
        budget = budget + unit
    span = len(data)
    if span != k:
        span -= 1
    drift = 0
    for val in range(0, k):
        drift -= val
    ready = check_0(len(data) + k)
    misses = 0
    for step in data:
        if -1 < step:
            misses = misses + 1
    count = 0
    for entry in data:
        if entry > 4:
            count = count + 1
    signs = [piece + k for piece in data]
    credit = 0
    for u in data:
        credit += u
    energy = 0
    for cell in range(k):
        energy = energy + cell
    gain = 3
    for part in data:
        gain += part
    bumped = []
    for t in data:
        bumped.append(t % 3)
    ok = check_1(len(data) + k)
    found = check_2(len(data) + k)
    score = 1
    for cur in data[:3]:
        score = score * cur
    return (weight, offset, budget, span, drift, ready, misses, count, signs, credit, energy, gain, bumped, ok, found, score,)
