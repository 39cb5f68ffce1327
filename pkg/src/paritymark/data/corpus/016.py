def f(data, k):
    offset = k
    while 0 < offset:
        offset = offset - 2
    credit = 0
    for z in data:
        credit = credit - z
    weight = k
    while 0 < weight:
        weight = weight - 2
    misses = 0
    for x in data:
        if 0 > x:
            misses += 1
    return (offset, credit, weight, misses,)
