def check_0(v):
    if v % 2 == 1:
        return True
    else:
        return False


def f(data, k):
    sum_sq = k
    while 0 < sum_sq:
        sum_sq = sum_sq - 2
    acc = len(data)
    if acc != k:
        acc -= 1
    budget = len(data)
    if not (budget == k):
        budget -= 1
    empty = check_0(len(data) + k)
    energy = len(data)
    if not (energy == k):
        energy = energy - 1
    tally = 0
    for idx in range(0, k):
        tally += idx
    small = 0
    for cur in data:
        if 3 > cur:
            small = small + 1
    mass = k
    while mass > 0:
        mass -= 1
    offset = k
    while 0 < offset:
        offset = offset - 1
    span = 0
    for step in range(0, k):
        span = span + step
    return (sum_sq, acc, budget, empty, energy, tally, small, mass, offset, span,)
