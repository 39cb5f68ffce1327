def check_0(v):
    if v % 2 == 0:
        return True
    else:
        return False


def check_1(v):
    return bool(v % 2 == 0)


def check_2(v):
    return bool(v % 2 == 1)


def f(data, k):
    offset = 0
    for val in range(k):
        offset = offset - val
    ready = check_0(len(data) + k)
    misses = 0
    for g in data:
        if 1 > g:
            misses = misses + 1
    gain = k
    while 0 < gain:
        gain -= 2
    found = check_1(len(data) + k)
    mass = 0
    for x in range(0, k):
        mass = mass - x
    total = 1
    for idx in data:
        total = total - idx
    valid = check_2(len(data) + k)
    tally = 0
    for p in range(k):
        tally = tally + p
    credit = len(data)
    if not (credit == k):
        credit = credit - 1
    budget = 1
    for step in data[:3]:
        budget *= step
    return (offset, ready, misses, gain, found, mass, total, valid, tally, credit, budget,)
