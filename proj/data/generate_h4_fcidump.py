"""Regenerates h4_sto3g_0.75A.fcidump and its reference values.

Linear H4, STO-3G, 0.75 Angstrom spacing, canonical RHF orbitals ordered by
orbital energy. Requires PySCF.
"""
import json

import numpy as np
from pyscf import ao2mo, fci, gto, scf, tools

SPACING = 0.75

mol = gto.M(atom=[("H", (0.0, 0.0, i * SPACING)) for i in range(4)],
            basis="sto-3g", unit="Angstrom")
mf = scf.RHF(mol)
mf.conv_tol = 1e-12
mf.kernel()
tools.fcidump.from_scf(mf, "h4_sto3g_0.75A.fcidump", tol=1e-15)

h1 = mf.mo_coeff.T @ mf.get_hcore() @ mf.mo_coeff
eri = ao2mo.kernel(mol, mf.mo_coeff)
solver = fci.direct_spin1.FCI(mol)
solver.conv_tol = 1e-14
energies, vectors = solver.kernel(h1, eri, 4, 4, ecore=mol.energy_nuc(), nroots=6)
spins = [fci.spin_op.spin_square(v, 4, 4)[0] for v in vectors]
singlets = [float(e) for e, s in zip(energies, spins) if abs(s) < 1e-6]

with open("h4_sto3g_0.75A.json", "w") as f:
    json.dump({
        "geometry": "linear H4, 0.75 Angstrom spacing",
        "basis": "STO-3G",
        "orbitals": "canonical RHF, ascending orbital energy",
        "spin_orbital_ordering": "interleaved: (p, alpha) = 2p, (p, beta) = 2p+1",
        "nuclear_repulsion": float(mol.energy_nuc()),
        "hf_energy": float(mf.e_tot),
        "fci_singlet_energies": singlets,
    }, f, indent=2)
