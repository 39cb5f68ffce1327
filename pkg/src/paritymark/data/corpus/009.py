def f(data, k):
    picked = []
    for h in range(0, len(data)):
        picked.append(data[h] % 3)
    drift = 1
    for z in range(k):
        drift = drift * (z % 3 + 1)
    return (picked, drift,)
