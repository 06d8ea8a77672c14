#pragma once

/**
 * @file reports.hpp
 * @brief JSON report bodies, the versioned envelope, and CSV exports.
 *
 * Report files look like
 *   { "schema_version": 1, "kind": "...", "meta": {...}, "body": {...} }
 * where meta carries the timestamp and body is a pure function of the inputs:
 * identical config and seed reproduce the body byte for byte. Files are
 * written to a temp name and renamed into place.
 */

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "dmp/conditions.hpp"
#include "dmp/deformation.hpp"
#include "dmp/functional.hpp"
#include "dmp/minimax.hpp"
#include "dmp/oracle.hpp"
#include "dmp/spectrum.hpp"

namespace dmp {

inline constexpr int kReportSchemaVersion = 1;

nlohmann::json to_json(const Spectrum& sp);
nlohmann::json to_json(const ConditionReport& rep);
nlohmann::json to_json(const SweepReport& rep);
nlohmann::json to_json(const PsConstants& c);
nlohmann::json to_json(const MountainGeometry& g);
nlohmann::json to_json(const MinimaxReport& rep);
nlohmann::json to_json(const CertificateRecord& rec);
nlohmann::json to_json(const NewtonResult& nr);
nlohmann::json to_json(const SolutionCatalog& cat);
nlohmann::json to_json(const CatalogMatch& match);
nlohmann::json to_json(const DeformationVerdict& v);
nlohmann::json to_json(const DescentVerdict& v);
nlohmann::json to_json(const HypothesisReport& rep);

/// Wrap a body with schema version, kind, and a meta block (timestamp lives
/// there, outside the reproducible body).
nlohmann::json report_envelope(const std::string& kind, nlohmann::json body);

void write_json_atomic(const std::filesystem::path& path, const nlohmann::json& j);
void write_text_atomic(const std::filesystem::path& path, const std::string& text);

std::string path_csv(const std::vector<PeriodicSequence>& knots, const Objective& f);
std::string trace_csv(const FlowTrace& trace);
std::string catalog_csv(const SolutionCatalog& cat);

}  // namespace dmp
