def f(data, k):
    tally = 0
    for item in range(k):
        tally = tally + item
    return (tally,)
