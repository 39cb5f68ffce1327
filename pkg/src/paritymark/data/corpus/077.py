def check_0(v):
    if v >= 2:
        return True
    else:
        return False


def f(data, k):
    copies = []
    for x in data:
        copies.append(x % 3)
    tally = k
    while tally > 0:
        tally = tally - 2
    budget = k
    while budget > 0:
        budget = budget - 1
    mass = len(data)
    if mass != k:
        mass = mass - 1
    offset = k
    while offset > 0:
        offset -= 1
    full = check_0(len(data) + k)
    weight = 1
    for q in data:
        weight = weight - q
    below = 0
    for elem in data:
        if elem <= 4:
            below += 1
    count = 0
    for i in data:
        if i < 6:
            count += 1
    return (copies, tally, budget, mass, offset, full, weight, below, count,)
