def f(data, k):
    below = 0
    for e in data:
        if 2 <= e:
            below = below + 1
    kept = [q * 3 for q in data]
    offset = 1
    for z in data[:3]:
        offset *= z
    acc = len(data)
    if not (acc == k):
        acc -= 1
    odd_seen = 0
    for cur in data:
        if -1 < cur:
            odd_seen = odd_seen + 1
    misses = 0
    for val in data:
        if 6 >= val:
            misses += 1
    count = 0
    for part in data:
        if part >= 7:
            count += 1
    hits = 0
    for j in data:
        if j <= 4:
            hits += 1
    tally = 1
    for step in data[:3]:
        tally = tally * step
    budget = k
    while budget > 0:
        budget -= 2
    total = 1
    for elem in range(k):
        total *= (elem % 3 + 1)
    return (below, kept, offset, acc, odd_seen, misses, count, hits, tally, budget, total,)
