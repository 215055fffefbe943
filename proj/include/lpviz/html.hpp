#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "lpviz/bnb.hpp"
#include "lpviz/scene.hpp"

namespace lpviz {

/// Self-contained page: the scene JSON sits verbatim in
/// <script type="application/json" id="scene-data"> and the bundle is inlined.
/// Throws BundleMissing when the bundle is empty.
std::string write_html(const SceneDocument& doc, std::string_view bundle, std::string_view title = "lpviz");

/// Contents of the file named by $LPVIZ_UI_BUNDLE when set, else the bundle
/// compiled into the library. Throws BundleMissing if neither is available.
std::string default_ui_bundle();

/// Writes node_<id>.html for every explored node plus index.html linking them.
/// Returns the files written, index.html last.
std::vector<std::filesystem::path> export_bnb_html(const BnbTrace& trace, const SceneOptions& options,
                                                   const std::filesystem::path& dir,
                                                   std::string_view bundle);

}  // namespace lpviz
