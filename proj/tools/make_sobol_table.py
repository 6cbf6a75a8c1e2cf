#!/usr/bin/env python3
"""Regenerate src/sobol_directions.cpp from the Joe-Kuo direction numbers.

The table is the standard new-joe-kuo-6 set (primitive polynomials and
initial direction numbers m_k), taken from scipy.stats, which ships the
same data. We embed the first SOBOL_TABLE_DIMS dimensions; dimension 1 is
the plain van der Corput sequence and needs no entry.

Run from the repository root:  python3 tools/make_sobol_table.py
"""

import numpy as np
import scipy.stats._sobol as sobol_data

DIMS = 168  # >= 100 columns needed for (N, 2k) bases at k = 50

poly = np.empty(sobol_data._MAXDIM, dtype=np.uint32)
vinit = np.empty((sobol_data._MAXDIM, sobol_data._MAXDEG), dtype=np.uint32)
sobol_data._initialize_direction_numbers(poly, vinit, np.uint32(sobol_data._MAXDIM))

rows = []
m_flat = []
for d in range(1, DIMS):  # 0-based dim index d corresponds to dimension d+1
    p = int(poly[d])
    deg = p.bit_length() - 1
    a = (p >> 1) & ~(1 << (deg - 1)) if deg > 0 else 0  # inner coefficient bits
    offset = len(m_flat)
    m_flat.extend(int(vinit[d, j]) for j in range(deg))
    rows.append((deg, a, offset))

lines = []
lines.append("// Generated by tools/make_sobol_table.py -- do not edit by hand.")
lines.append("// Joe-Kuo primitive polynomials and initial direction numbers")
lines.append("// (new-joe-kuo-6) for Sobol' sequence dimensions 2..%d." % DIMS)
lines.append("")
lines.append('#include "gsa/sobol.hpp"')
lines.append("")
lines.append("namespace gsa::detail {")
lines.append("")
lines.append("const int sobol_table_dims = %d;" % DIMS)
lines.append("")
lines.append("// degree, inner polynomial coefficients, offset into m_values")
lines.append("const SobolPolynomial sobol_polynomials[%d] = {" % len(rows))
for i in range(0, len(rows), 6):
    chunk = ", ".join("{%d, %d, %d}" % r for r in rows[i:i + 6])
    lines.append("    " + chunk + ",")
lines.append("};")
lines.append("")
lines.append("const unsigned sobol_m_values[%d] = {" % len(m_flat))
for i in range(0, len(m_flat), 20):
    lines.append("    " + ", ".join(str(v) for v in m_flat[i:i + 20]) + ",")
lines.append("};")
lines.append("")
lines.append("}  // namespace gsa::detail")
lines.append("")

with open("src/sobol_directions.cpp", "w") as f:
    f.write("\n".join(lines))
print("wrote src/sobol_directions.cpp: %d dims, %d m values" % (DIMS, len(m_flat)))
