"""Independent numpy computation of the frozen regression constants used by
the C++ tests (cube3, Grover coin, final vertex 7)."""
import numpy as np


def walk(d):
    nv = 2 ** d
    coin = np.full((d, d), 2 / d) - np.eye(d)
    n = nv * d
    shift = np.zeros((n, n))
    for v in range(nv):
        for j in range(d):
            shift[(v ^ (1 << j)) * d + j, v * d + j] = 1
    return shift @ np.kron(np.eye(nv), coin)


def dark_basis(u, final_rows):
    # eigen route: per eigenspace, kernel of the final-row restriction
    ev, vec = np.linalg.eig(u)
    ph = np.mod(np.angle(ev), 2 * np.pi)
    out = []
    used = np.zeros(len(ph), bool)
    for i in range(len(ph)):
        if used[i]:
            continue
        dist = np.abs(np.angle(np.exp(1j * (ph - ph[i]))))
        idx = np.where(dist < 1e-7)[0]
        used[idx] = True
        b, _ = np.linalg.qr(vec[:, idx])
        _, s, vh = np.linalg.svd(b[final_rows, :])
        rank = int(np.sum(s > 1e-8))
        out.append(b @ vh[rank:].conj().T)
    return np.hstack(out)


def measured(u, rows, psi, steps):
    psi = psi.astype(complex).copy()
    ht = 0.0
    for t in range(1, steps + 1):
        psi = u @ psi
        q = np.sum(np.abs(psi[rows]) ** 2)
        ht += t * q
        psi[rows] = 0
    return np.sum(np.abs(psi) ** 2), ht


if __name__ == "__main__":
    d = 3
    u = walk(d)
    rows = list(range(7 * d, 8 * d))
    v = dark_basis(u, rows)
    print("iht dimension", v.shape[1])
    uniform = np.full(24, 1 / np.sqrt(24))
    origin = np.zeros(24)
    origin[0:3] = 1 / np.sqrt(3)
    basis0 = np.zeros(24)
    basis0[0] = 1
    basis5 = np.zeros(24)
    basis5[5] = 1
    for name, psi in [("uniform", uniform), ("origin", origin), ("basis 0:0", basis0), ("basis 1:2", basis5)]:
        ov = np.sum(np.abs(v.conj().T @ psi) ** 2)
        surv, ht = measured(u, rows, psi, 5000)
        print(f"{name}: overlap {ov:.12g} survival(5000) {surv:.12g} hitting_time(5000) {ht:.12g}")
