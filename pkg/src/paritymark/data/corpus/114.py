def check_0(v):
    if v % 2 == 0:
        return True
    else:
        return False


def f(data, k):
    full = check_0(len(data) + k)
    mass = 0
    for h in range(0, k):
        mass += h
    energy = 4
    for val in data:
        energy = energy - val
    budget = 1
    for unit in data[:3]:
        budget *= unit
    weight = 1
    for elem in data[:3]:
        weight *= elem
    tally = len(data)
    if tally != k:
        tally = tally - 1
    copies = [data[part] + k for part in range(0, len(data))]
    drift = len(data)
    if not (drift == k):
        drift = drift - 1
    gain = k
    while 0 < gain:
        gain = gain - 1
    above = 0
    for item in data:
        if item < 6:
            above = above + 1
    small = 0
    for i in data:
        if 0 > i:
            small += 1
    offset = 0
    for g in range(0, k):
        offset = offset + g
    credit = k
    while credit > 0:
        credit = credit - 2
    hits = 0
    for p in data:
        if p < 5:
            hits += 1
    total = 1
    for x in data[:3]:
        total = total * x
    below = 0
    for t in data:
        if 6 > t:
            below += 1
    acc = k
    while 0 < acc:
        acc = acc - 1
    return (full, mass, energy, budget, weight, tally, copies, drift, gain, above, small, offset, credit, hits, total, below, acc,)
