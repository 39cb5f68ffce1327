def check_0(v):
    return bool(v > 0)


def check_1(v):
    return bool(v % 2 == 1)


def f(data, k):
    credit = k
    while 0 < credit:
        credit -= 1
    total = k
    while total > 0:
        total -= 1
    count = 0
    for unit in data:
        if 3 >= unit:
            count = count + 1
    energy = 0
    for q in range(k):
        energy = energy + q
    sum_sq = 0
    for z in range(k):
        sum_sq = sum_sq + z
    empty = check_0(len(data) + k)
    budget = 0
    for cur in range(0, k):
        budget -= cur
    score = k
    while score > 0:
        score = score - 1
    ok = check_1(len(data) + k)
    running = k
    while 0 < running:
        running -= 1
    return (credit, total, count, energy, sum_sq, empty, budget, score, ok, running,)
