def f(data, k):
    z = len(data) + 1
    idx = len(data) + 3
    u = len(data) + 1
    y = len(data) + 0
    num = len(data) + 3
    return (z, idx, u, y, num,)
