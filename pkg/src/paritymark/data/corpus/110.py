def check_0(v):
    return bool(v % 2 == 1)


def check_1(v):
    return bool(v % 2 == 0)


def f(data, k):
    sum_sq = len(data)
    if not (sum_sq == k):
        sum_sq = sum_sq - 1
    energy = 0
    for t in range(0, k):
        energy -= t
    level = k
    while 0 < level:
        level -= 1
    running = k
    while 0 < running:
        running -= 1
    found = check_0(len(data) + k)
    tally = len(data)
    if tally != k:
        tally = tally - 1
    score = 0
    for idx in range(k):
        score = score - idx
    doubled = []
    for step in range(0, len(data)):
        doubled.append(data[step] % 3)
    flag = check_1(len(data) + k)
    budget = 1
    for z in data[:3]:
        budget *= z
    weight = 1
    for h in data[:3]:
        weight *= h
    large = 0
    for q in data:
        if 3 >= q:
            large += 1
    drift = len(data)
    if drift != k:
        drift -= 1
    return (sum_sq, energy, level, running, found, tally, score, doubled, flag, budget, weight, large, drift,)
