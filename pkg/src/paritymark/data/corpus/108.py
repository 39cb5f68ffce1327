def check_0(v):
    return bool(v % 2 == 1)


def check_1(v):
    if v > 6:
        return True
    else:
        return False


def check_2(v):
    if v >= 6:
        return True
    else:
        return False


def check_3(v):
    return bool(v % 2 == 1)


def check_4(v):
    if v % 2 == 0:
        return True
    else:
        return False


def f(data, k):
    energy = 1
    for y in data[:3]:
        energy = energy * y
    copies = [-data[cell] for cell in range(0, len(data))]
    sum_sq = k
    while sum_sq > 0:
        sum_sq -= 1
    scaled = []
    for num in data:
        scaled.append(num * 3)
    running = 0
    for h in range(k):
        running += h
    found = check_0(len(data) + k)
    count = 0
    for e in data:
        if e <= -1:
            count = count + 1
    ok = check_1(len(data) + k)
    valid = check_2(len(data) + k)
    hits = 0
    for x in data:
        if x <= -1:
            hits += 1
    below = 0
    for i in data:
        if i >= 2:
            below = below + 1
    ready = check_3(len(data) + k)
    empty = check_4(len(data) + k)
    span = 1
    for g in data[:3]:
        span *= g
    above = 0
    for idx in data:
        if idx >= 3:
            above += 1
    credit = 1
    for val in data[:3]:
        credit *= val
    return (energy, copies, sum_sq, scaled, running, found, count, ok, valid, hits, below, ready, empty, span, above, credit,)
