#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <vector>

#include "grlwe/codec.hpp"
#include "grlwe/errors.hpp"
#include "grlwe/group_ring.hpp"
#include "grlwe/lattice_tools.hpp"
#include "grlwe/negacyclic.hpp"
#include "grlwe/params.hpp"
#include "grlwe/pke.hpp"
#include "grlwe/sampler.hpp"
#include "grlwe/spectral.hpp"

namespace py = pybind11;
using namespace grlwe;

namespace {

RingElement element_from_lists(const std::vector<int64_t>& f, const std::vector<int64_t>& g,
                               uint32_t q) {
  if (f.size() != g.size()) raise(errc::dimension_mismatch, "f and g must share a length");
  return gr_from_i64(f, g, q);
}

py::bytes to_bytes(const std::vector<uint8_t>& v) {
  return py::bytes(reinterpret_cast<const char*>(v.data()), v.size());
}

std::vector<uint8_t> from_bytes(const py::bytes& b) {
  const std::string s = b;
  return std::vector<uint8_t>(s.begin(), s.end());
}

}  // namespace

PYBIND11_MODULE(_grlwe, m) {
  m.doc() = "LWE over the dihedral quotient ring: parameters, ring arithmetic, "
            "spectral analysis, sampling, encryption and lattice checks";

  py::register_exception<Error>(m, "GrlweError");

  py::enum_<Profile>(m, "Profile")
      .value("TOY", Profile::Toy)
      .value("DEFAULT", Profile::Default)
      .value("CUSTOM", Profile::Custom);

  py::enum_<MulMode>(m, "MulMode")
      .value("SCHOOLBOOK", MulMode::Schoolbook)
      .value("NTT", MulMode::Ntt)
      .value("AUTO", MulMode::Auto);

  py::enum_<ErrorMode>(m, "ErrorMode")
      .value("ROUNDED", ErrorMode::Rounded)
      .value("INTEGRATED", ErrorMode::Integrated);

  py::enum_<SampleOrder>(m, "SampleOrder")
      .value("LEFT_SECRET", SampleOrder::LeftSecret)
      .value("RIGHT_SECRET", SampleOrder::RightSecret);

  py::class_<ParamSet>(m, "ParamSet")
      .def_readonly("n", &ParamSet::n)
      .def_readonly("m", &ParamSet::m)
      .def_readonly("q", &ParamSet::q)
      .def_readonly("sigma", &ParamSet::sigma)
      .def_readonly("ntt_enabled", &ParamSet::ntt_enabled)
      .def_readonly("profile", &ParamSet::profile)
      .def_readonly("security_note", &ParamSet::security_note)
      .def("__repr__", [](const ParamSet& p) {
        return "<ParamSet n=" + std::to_string(p.n) + " q=" + std::to_string(p.q) + ">";
      });

  m.def("build_params", &build_params, py::arg("n"), py::arg("profile") = Profile::Default);
  m.def("validate", [](const ParamSet& p) {
    std::vector<std::string> out;
    for (Violation v : validate(p)) out.emplace_back(violation_name(v));
    return out;
  });
  m.def("param_report", &param_report);

  py::class_<Rng>(m, "Rng")
      .def(py::init<uint64_t>(), py::arg("seed"))
      .def("next_u64", &Rng::next_u64)
      .def("gaussian", &Rng::gaussian, py::arg("sigma"));

  py::class_<RingElement>(m, "RingElement")
      .def(py::init(&element_from_lists), py::arg("f"), py::arg("g"), py::arg("q"))
      .def_property_readonly("f", [](const RingElement& x) { return x.f.coeffs; })
      .def_property_readonly("g", [](const RingElement& x) { return x.g.coeffs; })
      .def_property_readonly("n", &RingElement::n)
      .def_property_readonly("q", &RingElement::q)
      .def("centered", &coeff_embed_centered)
      .def("__eq__", [](const RingElement& a, const RingElement& b) { return a == b; })
      .def("__repr__", [](const RingElement& x) {
        return "<RingElement n=" + std::to_string(x.n()) + " q=" + std::to_string(x.q()) + ">";
      });

  m.def("zero", &gr_zero, py::arg("m"), py::arg("q"));
  m.def("one", &gr_one, py::arg("m"), py::arg("q"));
  m.def("add", &gr_add);
  m.def("sub", &gr_sub);
  m.def("neg", &gr_neg);
  m.def("scalar_mul", &gr_scalar_mul, py::arg("c"), py::arg("x"));
  m.def("mul", &gr_mul, py::arg("x"), py::arg("y"), py::arg("mode") = MulMode::Auto);
  m.def("mul_oracle", &gr_mul_oracle, "ground-truth Cayley-table product (n <= 64)");
  m.def("involution_s", &gr_involution_s);
  m.def("inverse", &gr_inverse);
  m.def("norm_l2", [](const RingElement& x) { return coeff_norm(x, Norm::L2); });
  m.def("norm_linf", [](const RingElement& x) { return coeff_norm(x, Norm::Linf); });
  m.def("normal_form_transform", &normal_form_transform, py::arg("a1"), py::arg("b1"),
        py::arg("a2"), py::arg("b2"));

  m.def("matrix_norm", py::overload_cast<const RingElement&>(&matrix_norm));
  m.def("is_invertible_real", &is_invertible_real, py::arg("x"), py::arg("tol") = 1e-9);
  m.def("spectral_profile", [](const RingElement& x) {
    std::vector<std::tuple<uint32_t, double, double>> out;
    for (const auto& e : spectral_profile(x).evals) out.emplace_back(e.k, e.abs_f, e.abs_g);
    return out;
  });
  m.def("gauss_norm_tail", &gauss_norm_tail, py::arg("sigma"), py::arg("n"), py::arg("trials"),
        py::arg("threshold_mult"), py::arg("rng"));

  py::class_<ErrorDist>(m, "ErrorDist")
      .def(py::init<double, uint32_t, uint32_t, ErrorMode>(), py::arg("sigma"), py::arg("q"),
           py::arg("m"), py::arg("mode") = ErrorMode::Rounded)
      .def_static("from_params", &ErrorDist::from_params, py::arg("params"),
                  py::arg("mode") = ErrorMode::Rounded)
      .def_property_readonly("sigma", &ErrorDist::sigma)
      .def("pmf", &ErrorDist::pmf, py::return_value_policy::copy);

  m.def("sample_uniform", &sample_uniform, py::arg("m"), py::arg("q"), py::arg("rng"));
  m.def("sample_error", &sample_error, py::arg("dist"), py::arg("rng"));

  py::class_<LweSample>(m, "LweSample")
      .def_readonly("a", &LweSample::a)
      .def_readonly("b", &LweSample::b);
  m.def("sample_lwe", &sample_lwe, py::arg("s"), py::arg("dist"), py::arg("rng"),
        py::arg("order") = SampleOrder::LeftSecret);
  m.def("to_normal_form", &to_normal_form);

  m.def("check_dual_permutation", &check_dual_permutation,
        "exact dual-vs-inverse-ideal correspondence for a principal ideal (n <= 16)");
  m.def("invertible_over_Q", &invertible_over_Q);

  py::class_<PublicKey>(m, "PublicKey")
      .def_readonly("a", &PublicKey::a)
      .def_readonly("b", &PublicKey::b)
      .def_readonly("params", &PublicKey::params);
  py::class_<SecretKey>(m, "SecretKey")
      .def_readonly("s", &SecretKey::s)
      .def_readonly("e", &SecretKey::e)
      .def_readonly("params", &SecretKey::params);
  py::class_<Ciphertext>(m, "Ciphertext")
      .def_readonly("u", &Ciphertext::u)
      .def_readonly("v", &Ciphertext::v);

  m.def("keygen", [](const ParamSet& p, Rng& rng) { return keygen(p, rng); }, py::arg("params"),
        py::arg("rng"));
  m.def(
      "encrypt",
      [](const PublicKey& pk, const std::vector<uint8_t>& bits, Rng& rng) {
        Plaintext z{bits};
        return encrypt(pk, z, rng);
      },
      py::arg("pk"), py::arg("bits"), py::arg("rng"));
  m.def("decrypt", [](const SecretKey& sk, const Ciphertext& ct) {
    return decrypt(sk, ct).bits;
  });
  m.def("estimate_failure_rate", [](const ParamSet& p, uint32_t trials, Rng& rng) {
    const FailureEstimate est = estimate_failure_rate(p, trials, rng);
    py::dict d;
    d["trials"] = est.trials;
    d["message_failures"] = est.message_failures;
    d["bit_failures"] = est.bit_failures;
    d["per_message_rate"] = est.per_message_rate;
    d["per_bit_rate"] = est.per_bit_rate;
    d["wilson_low"] = est.wilson_low;
    d["wilson_high"] = est.wilson_high;
    d["max_noise_inf"] = est.max_noise_inf;
    d["noise_within_quarter_q"] = est.noise_within_quarter_q;
    return d;
  });

  m.def("serialize_public_key", [](const PublicKey& pk) { return to_bytes(serialize(pk)); });
  m.def("serialize_secret_key", [](const SecretKey& sk) { return to_bytes(serialize(sk)); });
  m.def("serialize_ciphertext", [](const Ciphertext& ct, const ParamSet& p) {
    return to_bytes(serialize(ct, p));
  });
  m.def("deserialize_public_key",
        [](const py::bytes& b) { return deserialize_public_key(from_bytes(b)); });
  m.def("deserialize_secret_key",
        [](const py::bytes& b) { return deserialize_secret_key(from_bytes(b)); });
  m.def("deserialize_ciphertext", [](const py::bytes& b) {
    return deserialize_ciphertext(from_bytes(b));
  });

  m.attr("__version__") = "0.1.0";
}
