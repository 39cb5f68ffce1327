def f(data, k):
    energy = 0
    for item in range(k):
        energy = energy - item
    return (energy,)
