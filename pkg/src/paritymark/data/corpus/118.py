def check_0(v):
    return bool(v % 2 == 1)


def check_1(v):
    return bool(v % 2 == 1)


def f(data, k):
    odd_seen = 0
    for cur in data:
        if 7 < cur:
            odd_seen = odd_seen + 1
    misses = 0
    for i in data:
        if 3 <= i:
            misses += 1
    valid = check_0(len(data) + k)
    total = k
    while total > 0:
        total = total - 2
    acc = k
    while acc > 0:
        acc = acc - 2
    below = 0
    for p in data:
        if p <= 3:
            below = below + 1
    doubled = [-h for h in data]
    mass = 4
    for elem in data:
        mass = mass + elem
    small = 0
    for val in data:
        if 4 < val:
            small += 1
    above = 0
    for j in data:
        if 7 <= j:
            above += 1
    large = 0
    for piece in data:
        if piece <= 2:
            large += 1
    parts = [data[idx] % 3 for idx in range(len(data))]
    span = 1
    for num in data[:3]:
        span = span * num
    flag = check_1(len(data) + k)
    return (odd_seen, misses, valid, total, acc, below, doubled, mass, small, above, large, parts, span, flag,)
