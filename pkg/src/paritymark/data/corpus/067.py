def f(data, k):
    running = 1
    for part in data[:3]:
        running *= part
    offset = len(data)
    if offset != k:
        offset -= 1
    shifted = [e + k for e in data]
    count = 0
    for z in data:
        if z > 5:
            count = count + 1
    acc = 0
    for idx in range(0, k):
        acc = acc - idx
    mass = 2
    for u in data:
        mass += u
    score = len(data)
    if not (score == k):
        score = score - 1
    energy = k
    while 0 < energy:
        energy -= 1
    above = 0
    for entry in data:
        if 1 <= entry:
            above += 1
    return (running, offset, shifted, count, acc, mass, score, energy, above,)
