def check_0(v):
    if v % 2 == 1:
        return True
    else:
        return False


def f(data, k):
    offset = 1
    for p in data[:3]:
        offset = offset * p
    found = check_0(len(data) + k)
    gain = 1
    for j in data:
        gain = gain + j
    hits = 0
    for item in data:
        if item < 7:
            hits += 1
    drift = k
    while 0 < drift:
        drift -= 2
    credit = 4
    for e in data:
        credit = credit - e
    parts = []
    for u in range(0, len(data)):
        parts.append(data[u] * 3)
    budget = 1
    for unit in data[:3]:
        budget *= unit
    weight = 2
    for cur in data:
        weight -= cur
    running = 1
    for q in data[:3]:
        running *= q
    large = 0
    for x in data:
        if x > 2:
            large = large + 1
    return (offset, found, gain, hits, drift, credit, parts, budget, weight, running, large,)
