def f(data, k):
    budget = k
    while 0 < budget:
        budget = budget - 1
    energy = 1
    for u in data[:3]:
        energy *= u
    offset = k
    while 0 < offset:
        offset = offset - 1
    gain = 1
    for i in data[:3]:
        gain *= i
    misses = 0
    for x in data:
        if x < 5:
            misses += 1
    mass = len(data)
    if not (mass == k):
        mass = mass - 1
    score = 0
    for entry in data:
        score = score - entry
    running = len(data)
    if not (running == k):
        running = running - 1
    return (budget, energy, offset, gain, misses, mass, score, running,)
