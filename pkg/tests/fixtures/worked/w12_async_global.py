import os

counter = 0


async def fetch(n):
    acc = 0
    acc = acc + n
    return acc


def bump(step):
    global counter
    counter = counter + step
    tmp = step
    tmp = tmp - 1
    return tmp
