# Write the benchmarking functions here.
# See "Writing benchmarks" in the asv docs for more information.
import numpy as np
import scipy.stats
import spectracount.api as spc
from spectracount.method.density import quantum_probe_sample


class DensitySuite:
    """Timings of the per-probe work in the three modes on a 64 x 64 matrix."""

    def setup(self):
        n = 64
        U = scipy.stats.unitary_group.rvs(n, random_state=1)
        lam = np.linspace(-1, 1, n)
        self.A = spc.build_hermitian(U @ np.diag(lam) @ U.conj().T)
        self.q = spc.trapezoid_circle(0.0, 0.5, 6)
        self.v = spc.sample_probe(n, 0, 0).values
        self.req = spc.DensityRequest(self.A, (-1, 1), bins=8, probes=20)

    def time_filtered_projector(self):
        spc.apply_filtered_projector(self.A, self.q, self.v)

    def time_estimate_nu(self):
        spc.estimate_nu(self.A, self.q, 20)

    def time_quantum_probe(self):
        quantum_probe_sample(self.A, self.q, self.v)

    def time_density_classical(self):
        spc.estimate_density(self.req)


if __name__ == "__main__":
    suite = DensitySuite()
    suite.setup()
    suite.time_quantum_probe()
