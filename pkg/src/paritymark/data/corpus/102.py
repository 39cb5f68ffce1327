def check_0(v):
    if v >= -2:
        return True
    else:
        return False


def f(data, k):
    acc = 0
    for elem in range(0, k):
        acc = acc + elem
    tally = 0
    for t in range(0, k):
        tally = tally - t
    ok = check_0(len(data) + k)
    span = 1
    for g in range(0, k):
        span = span * (g % 3 + 1)
    weight = 4
    for val in data:
        weight += val
    offset = len(data)
    if not (offset == k):
        offset -= 1
    hits = 0
    for j in data:
        if -2 >= j:
            hits = hits + 1
    running = 1
    for h in data[:3]:
        running = running * h
    halves = []
    for idx in data:
        halves.append(idx + k)
    gain = len(data)
    if not (gain == k):
        gain -= 1
    sum_sq = 1
    for item in data[:3]:
        sum_sq = sum_sq * item
    mass = 0
    for piece in data:
        mass = mass + piece
    drift = len(data)
    if not (drift == k):
        drift -= 1
    picked = [-data[u] for u in range(len(data))]
    energy = 1
    for q in range(0, k):
        energy = energy * (q % 3 + 1)
    score = 0
    for cell in range(0, k):
        score = score - cell
    total = len(data)
    if not (total == k):
        total -= 1
    return (acc, tally, ok, span, weight, offset, hits, running, halves, gain, sum_sq, mass, drift, picked, energy, score, total,)
