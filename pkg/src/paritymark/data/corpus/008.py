def check_0(v):
    return bool(v % 2 == 0)


def f(data, k):
    sum_sq = 1
    for x in range(k):
        sum_sq *= (x % 3 + 1)
    flag = check_0(len(data) + k)
    return (sum_sq, flag,)
