#pragma once

// JSON loaders and report emitters. Loaders throw ParseError on shape
// problems; semantic law checking is left to the validators.

#include <nlohmann/json.hpp>

#include "adjforge/adjunctions.hpp"
#include "adjforge/starlab.hpp"

namespace adjforge::json_io {

using nlohmann::json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// base_dir resolves category/algebra references given as file paths.
fincat::CatPtr load_category(const json& j, const std::string& base_dir = "");
fincat::FinFunctor load_functor(const json& j, const std::string& base_dir = "");
fincat::NatTrans load_nattrans(const json& j, const std::string& base_dir = "");
monadics::FinMonad load_monad(const json& j, const std::string& base_dir = "");
monadics::FinComonad load_comonad(const json& j, const std::string& base_dir = "");
adjunctions::FinAdjunction load_adjunction(const json& j,
                                           const std::string& base_dir = "");

std::shared_ptr<const algmod::FqAlgebra> load_algebra(const json& j,
                                                      const std::string& base_dir = "");
algmod::LeftModule load_module(const json& j, const std::string& base_dir = "");
algmod::Bimodule load_bimodule(const json& j, const std::string& base_dir = "");

ffla::Matrix load_matrix(const json& j, uint32_t p);
json matrix_json(const ffla::Matrix& m);
json algebra_json(const algmod::FqAlgebra& r);
json module_json(const algmod::LeftModule& m);
json bimodule_json(const algmod::Bimodule& b);

json battery_json(const monadics::BatteryReport& r);
json pair_battery_json(const adjunctions::PairBatteryReport& r);
json concrete_battery_json(const starlab::ConcreteBattery& r);
json star_report_json(const starlab::StarContext& ctx, const starlab::StarVerdict& v);

// Rebuild a certificate from a serialized star report entry.
starlab::Certificate load_certificate(const json& j, uint32_t p,
                                      const std::shared_ptr<const algmod::FqAlgebra>& alg);

json load_file(const std::string& path);
std::string dirname_of(const std::string& path);

}  // namespace adjforge::json_io
