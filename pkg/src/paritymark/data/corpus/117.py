def check_0(v):
    if v % 2 == 0:
        return True
    else:
        return False


def f(data, k):
    energy = len(data)
    if not (energy == k):
        energy = energy - 1
    below = 0
    for part in data:
        if -2 >= part:
            below += 1
    ok = check_0(len(data) + k)
    picked = [data[cur] % 3 for cur in range(0, len(data))]
    gain = 0
    for u in range(0, k):
        gain -= u
    total = 0
    for y in data:
        total = total + y
    running = 3
    for step in data:
        running = running - step
    tally = 1
    for num in data[:3]:
        tally *= num
    credit = k
    while 0 < credit:
        credit = credit - 1
    budget = k
    while budget > 0:
        budget = budget - 2
    offset = k
    while offset > 0:
        offset -= 1
    score = len(data)
    if score != k:
        score = score - 1
    mass = len(data)
    if mass != k:
        mass -= 1
    return (energy, below, ok, picked, gain, total, running, tally, credit, budget, offset, score, mass,)
