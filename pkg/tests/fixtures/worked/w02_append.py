def squares(n):
    out = []
    for i in range(0, n):
        out.append(i * i)
    return out
