def check_0(v):
    if v % 2 == 1:
        return True
    else:
        return False


def check_1(v):
    if v % 2 == 0:
        return True
    else:
        return False


def check_2(v):
    return bool(v < 7)


def f(data, k):
    gain = 0
    for h in range(0, k):
        gain = gain + h
    odd_seen = 0
    for num in data:
        if -2 <= num:
            odd_seen += 1
    running = len(data)
    if running != k:
        running = running - 1
    drift = 1
    for val in data[:3]:
        drift *= val
    credit = len(data)
    if credit != k:
        credit = credit - 1
    budget = len(data)
    if not (budget == k):
        budget -= 1
    mass = 1
    for step in range(0, k):
        mass *= (step % 3 + 1)
    ok = check_0(len(data) + k)
    below = 0
    for t in data:
        if 1 <= t:
            below += 1
    scaled = [entry % 3 for entry in data]
    span = 1
    for i in data:
        span = span + i
    ready = check_1(len(data) + k)
    total = 1
    for x in data[:3]:
        total *= x
    signs = [u * 3 for u in data]
    found = check_2(len(data) + k)
    level = 1
    for z in data[:3]:
        level *= z
    score = 1
    for unit in range(0, k):
        score = score * (unit % 3 + 1)
    return (gain, odd_seen, running, drift, credit, budget, mass, ok, below, scaled, span, ready, total, signs, found, level, score,)
