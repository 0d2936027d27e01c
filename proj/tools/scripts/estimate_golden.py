"""Regenerate tests/golden/estimate.csv with 50-digit arithmetic."""
import mpmath as mp

mp.mp.dps = 50


def g12(x):
    return "%.12g" % float(mp.nstr(x, 30))


print("bits,mults_ours,mults_bf,qubits_ours,qubits_bf,iter_lo,iter_hi,total_lo,total_hi")
for n in (128, 256, 512):
    p = mp.mpf(2) ** n
    q = p ** mp.mpf("0.25")
    ln4p = mp.log(4 * p)
    iter_lo = mp.sqrt(2) * mp.pi * q / mp.sqrt((mp.pi + 1) * ln4p + 2 * mp.log(ln4p) + 2 * mp.pi)
    iter_hi = mp.mpf("4.251") * q * mp.sqrt(mp.log(p, 2))
    total_lo = 5097 * q * mp.mpf(n) ** 4 / mp.sqrt(n + 2 * mp.log(ln4p) / (mp.pi + 1))
    total_hi = 8264 * q * mp.mpf(n) ** mp.mpf("4.5")
    print(",".join([str(n), str(1944 * n * n), str(n ** 6), str(12 * n * n), str(n ** 3),
                    g12(iter_lo), g12(iter_hi), g12(total_lo), g12(total_hi)]))
