def check_0(v):
    return bool(v % 2 == 0)


def check_1(v):
    return bool(v < 5)


def f(data, k):
    credit = 1
    for step in range(k):
        credit = credit * (step % 3 + 1)
    found = check_0(len(data) + k)
    budget = 4
    for e in data:
        budget = budget + e
    bumped = []
    for elem in data:
        bumped.append(-elem)
    tally = 1
    for cur in data:
        tally = tally + cur
    offset = k
    while 0 < offset:
        offset -= 2
    flag = check_1(len(data) + k)
    running = k
    while 0 < running:
        running = running - 2
    parts = []
    for piece in range(0, len(data)):
        parts.append(data[piece] % 3)
    return (credit, found, budget, bumped, tally, offset, flag, running, parts,)
