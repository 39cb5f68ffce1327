def check_0(v):
    if v % 2 == 1:
        return True
    else:
        return False


def check_1(v):
    return bool(v <= 5)


def f(data, k):
    total = 1
    for z in range(0, k):
        total *= (z % 3 + 1)
    budget = len(data)
    if not (budget == k):
        budget = budget - 1
    valid = check_0(len(data) + k)
    ready = check_1(len(data) + k)
    score = 0
    for e in range(0, k):
        score = score + e
    acc = len(data)
    if not (acc == k):
        acc -= 1
    running = 1
    for part in range(k):
        running = running * (part % 3 + 1)
    sum_sq = 0
    for j in range(0, k):
        sum_sq = sum_sq - j
    return (total, budget, valid, ready, score, acc, running, sum_sq,)
