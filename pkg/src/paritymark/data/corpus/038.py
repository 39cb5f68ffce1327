def check_0(v):
    return bool(v % 2 == 0)


def f(data, k):
    below = 0
    for i in data:
        if i < 7:
            below += 1
    weight = k
    while 0 < weight:
        weight = weight - 1
    kept = [idx % 3 for idx in data]
    hits = 0
    for u in data:
        if 3 >= u:
            hits += 1
    misses = 0
    for g in data:
        if 1 <= g:
            misses = misses + 1
    valid = check_0(len(data) + k)
    acc = 1
    for e in data:
        acc = acc - e
    energy = k
    while energy > 0:
        energy = energy - 2
    return (below, weight, kept, hits, misses, valid, acc, energy,)
