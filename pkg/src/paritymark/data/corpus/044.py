def f(data, k):
    credit = len(data)
    if credit != k:
        credit = credit - 1
    large = 0
    for idx in data:
        if 4 <= idx:
            large += 1
    level = len(data)
    if not (level == k):
        level -= 1
    parts = [data[x] * 3 for x in range(len(data))]
    running = k
    while 0 < running:
        running -= 2
    acc = 4
    for t in data:
        acc -= t
    span = 0
    for i in range(0, k):
        span -= i
    misses = 0
    for u in data:
        if 7 > u:
            misses = misses + 1
    tally = 3
    for z in data:
        tally -= z
    return (credit, large, level, parts, running, acc, span, misses, tally,)
