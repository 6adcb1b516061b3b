#include "toolflow/decomposition.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

#include <json.hpp>

namespace toolflow {

std::set<ResourceType> Subtask::arg_types() const {
    std::set<ResourceType> out;
    for (const auto& a : args) out.insert(a.type);
    return out;
}

void validate_subtask(const Subtask& subtask, const std::set<int>& known_ids,
                      const DomainRegistry& domains) {
    const std::string where = "subtask " + std::to_string(subtask.id);
    if (subtask.id < 0) throw ProtocolViolation("id", where + ": id must be non-negative");
    for (const auto& d : subtask.domains) {
        if (!domains.contains(d)) {
            throw ProtocolViolation("task", where + ": unknown domain '" + d + "'");
        }
    }
    std::set<int> seen_deps;
    for (int dep : subtask.deps) {
        if (dep >= subtask.id) {
            throw ProtocolViolation(
                "dep", where + ": dependency " + std::to_string(dep) +
                           " does not precede the subtask (self or forward reference)");
        }
        if (dep < 0 || known_ids.count(dep) == 0) {
            throw ProtocolViolation("dep", where + ": dependency " + std::to_string(dep) +
                                               " names no declared subtask");
        }
        if (!seen_deps.insert(dep).second) {
            throw ProtocolViolation("dep", where + ": duplicate dependency " +
                                               std::to_string(dep));
        }
    }
    if (subtask.args.empty()) {
        throw ProtocolViolation("args", where + ": at least one input argument is required");
    }
    for (const auto& arg : subtask.args) {
        if (arg.is_placeholder()) {
            int ref = arg.placeholder->id;
            if (std::find(subtask.deps.begin(), subtask.deps.end(), ref) ==
                subtask.deps.end()) {
                throw ProtocolViolation("args", where + ": placeholder " +
                                                    arg.placeholder->raw() +
                                                    " does not reference a listed dependency");
            }
        }
    }
    if (subtask.returns.empty()) {
        throw ProtocolViolation("returns", where + ": at least one return is required");
    }
    for (const auto& ret : subtask.returns) {
        if (ret.placeholder.id != subtask.id) {
            throw ProtocolViolation("returns", where + ": return placeholder " +
                                                   ret.placeholder.raw() +
                                                   " must carry the subtask's own id");
        }
    }
}

namespace {

const char* kSubtaskFields[] = {"description", "task", "domains", "id", "dep", "args", "returns"};

void check_subtask_fields(const nlohmann::json& doc, const std::string& where) {
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        bool ok = false;
        for (const char* f : kSubtaskFields) {
            if (it.key() == f) {
                ok = true;
                break;
            }
        }
        if (!ok) throw ProtocolViolation(it.key(), where + ": unknown field");
    }
}

TypedValue typed_value_from_json(const nlohmann::json& doc, const TypeRegistry& types,
                                 const std::string& where) {
    if (!doc.is_object()) throw ProtocolViolation("args", where + ": entry must be an object");
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (it.key() != "type" && it.key() != "value") {
            throw ProtocolViolation(it.key(), where + ": unknown field in typed value");
        }
    }
    if (!doc.contains("type") || !doc.contains("value")) {
        throw ProtocolViolation("args", where + ": typed value needs 'type' and 'value'");
    }
    if (!doc.at("type").is_string() || !doc.at("value").is_string()) {
        throw ProtocolViolation("args", where + ": 'type' and 'value' must be strings");
    }
    TypedValue out{[&] {
                       try {
                           return types.parse(doc.at("type").get<std::string>());
                       } catch (const UnknownResourceType& e) {
                           throw ProtocolViolation("type", where + ": " + e.what());
                       }
                   }(),
                   doc.at("value").get<std::string>(),
                   std::nullopt};
    if (looks_like_placeholder(out.value)) {
        try {
            out.placeholder = parse_placeholder(out.value);
        } catch (const MalformedPlaceholder& e) {
            throw ProtocolViolation("value", where + ": " + e.what());
        }
    }
    return out;
}

}  // namespace

DecompositionResult parse_decomposition(const std::string& json_text,
                                        const TypeRegistry& types,
                                        const DomainRegistry& domains) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ProtocolViolation("document", std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw ProtocolViolation("document", "top level must be a JSON array");

    DecompositionResult result;
    std::set<int> known_ids;
    int position = 0;
    for (const auto& entry : doc) {
        const std::string where = "subtask at position " + std::to_string(position);
        if (!entry.is_object()) throw ProtocolViolation("document", where + ": must be an object");
        check_subtask_fields(entry, where);

        Subtask st;
        if (!entry.contains("id") || !entry.at("id").is_number_integer()) {
            throw ProtocolViolation("id", where + ": integer 'id' is required");
        }
        st.id = entry.at("id").get<int>();
        if (st.id != position) {
            throw ProtocolViolation("id", where + ": ids must be contiguous from 0 in order");
        }
        if (!entry.contains("description") || !entry.at("description").is_string()) {
            throw ProtocolViolation("description", where + ": string 'description' is required");
        }
        st.description = entry.at("description").get<std::string>();

        if (entry.contains("task") && entry.contains("domains")) {
            throw ProtocolViolation("task", where + ": 'task' and 'domains' are aliases; "
                                            "give exactly one");
        }
        const char* domain_key = entry.contains("domains") ? "domains" : "task";
        if (!entry.contains(domain_key) || !entry.at(domain_key).is_array()) {
            throw ProtocolViolation("task", where + ": domain list is required");
        }
        for (const auto& d : entry.at(domain_key)) {
            if (!d.is_string()) throw ProtocolViolation("task", where + ": domains must be strings");
            st.domains.push_back(d.get<std::string>());
        }

        if (!entry.contains("dep") || !entry.at("dep").is_array()) {
            throw ProtocolViolation("dep", where + ": 'dep' list is required");
        }
        for (const auto& d : entry.at("dep")) {
            if (!d.is_number_integer()) {
                throw ProtocolViolation("dep", where + ": dependencies must be integers");
            }
            st.deps.push_back(d.get<int>());
        }

        if (!entry.contains("args") || !entry.at("args").is_array()) {
            throw ProtocolViolation("args", where + ": 'args' list is required");
        }
        for (const auto& a : entry.at("args")) {
            st.args.push_back(typed_value_from_json(a, types, where));
        }

        if (!entry.contains("returns") || !entry.at("returns").is_array()) {
            throw ProtocolViolation("returns", where + ": 'returns' list is required");
        }
        for (const auto& r : entry.at("returns")) {
            TypedValue tv = typed_value_from_json(r, types, where + " returns");
            if (!tv.is_placeholder()) {
                throw ProtocolViolation("returns",
                                        where + ": return value must be a <GEN> placeholder");
            }
            st.returns.push_back(SubtaskReturn{tv.type, *tv.placeholder});
        }

        validate_subtask(st, known_ids, domains);
        known_ids.insert(st.id);
        result.subtasks.push_back(std::move(st));
        ++position;
    }
    return result;
}

DecompositionResult parse_decomposition(const std::string& json_text) {
    return parse_decomposition(json_text, builtin_types(), builtin_domains());
}

std::string serialize_decomposition(const DecompositionResult& result) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& st : result.subtasks) {
        nlohmann::ordered_json entry;
        entry["description"] = st.description;
        entry["task"] = st.domains;
        entry["id"] = st.id;
        entry["dep"] = st.deps;
        entry["args"] = nlohmann::ordered_json::array();
        for (const auto& a : st.args) {
            entry["args"].push_back(
                {{"type", a.type.name()},
                 {"value", a.is_placeholder() ? a.placeholder->raw() : a.value}});
        }
        entry["returns"] = nlohmann::ordered_json::array();
        for (const auto& r : st.returns) {
            entry["returns"].push_back({{"type", r.type.name()}, {"value", r.placeholder.raw()}});
        }
        doc.push_back(std::move(entry));
    }
    return doc.dump(2);
}

std::vector<std::vector<int>> subtask_schedule(const DecompositionResult& result) {
    std::vector<std::vector<int>> stages;
    std::set<int> done;
    std::set<int> pending;
    for (const auto& st : result.subtasks) pending.insert(st.id);

    while (!pending.empty()) {
        std::vector<int> stage;
        for (int id : pending) {
            const Subtask& st = result.subtasks[static_cast<std::size_t>(id)];
            bool ready = std::all_of(st.deps.begin(), st.deps.end(),
                                     [&](int d) { return done.count(d) > 0; });
            if (ready) stage.push_back(id);
        }
        // Parsing guarantees acyclicity, so progress is always possible.
        for (int id : stage) {
            pending.erase(id);
            done.insert(id);
        }
        stages.push_back(std::move(stage));
    }
    return stages;
}

DecompositionResult decompose(const std::string& request, Decomposer& decomposer,
                              const TypeRegistry& types, const DomainRegistry& domains,
                              int retries) {
    std::string last_error = "decomposer produced no output";
    for (int attempt = 0; attempt <= retries; ++attempt) {
        std::string raw = decomposer.decompose_raw(request);
        try {
            DecompositionResult result = parse_decomposition(raw, types, domains);
            if (result.subtasks.empty()) {
                throw EmptyDecomposition("decomposer could not parse the request: '" +
                                         request + "'");
            }
            result.source_request = request;
            return result;
        } catch (const ProtocolViolation& e) {
            last_error = e.what();
        }
    }
    throw DecompositionFailed("decomposition failed after " + std::to_string(retries + 1) +
                              " attempts: " + last_error);
}

// ---------------------------------------------------------------------------
// Rule-based decomposer
// ---------------------------------------------------------------------------

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool contains_any(const std::string& text, std::initializer_list<const char*> words) {
    for (const char* w : words) {
        if (text.find(w) != std::string::npos) return true;
    }
    return false;
}

struct FileMention {
    std::string path;
    std::string type;  // image | video | audio
};

std::vector<FileMention> find_files(const std::string& clause) {
    static const std::regex kFile(
        R"(([A-Za-z0-9_\-/]+)\.(png|jpg|jpeg|bmp|gif|mp4|avi|mov|mkv|wav|mp3|flac|ogg))",
        std::regex::icase);
    std::vector<FileMention> out;
    for (auto it = std::sregex_iterator(clause.begin(), clause.end(), kFile);
         it != std::sregex_iterator(); ++it) {
        std::string ext = lower((*it)[2].str());
        std::string type = "image";
        if (ext == "mp4" || ext == "avi" || ext == "mov" || ext == "mkv") type = "video";
        if (ext == "wav" || ext == "mp3" || ext == "flac" || ext == "ogg") type = "audio";
        out.push_back(FileMention{it->str(), type});
    }
    return out;
}

std::vector<std::string> split_clauses(const std::string& request) {
    // Sentence-ish boundaries; file names keep their dots because the split
    // requires whitespace after the punctuation.
    static const std::regex kSplit(R"((?:\.\s+|;\s*|!\s*|\?\s+|\n+|\s+then\s+|\s+and then\s+))");
    std::vector<std::string> out;
    std::sregex_token_iterator it(request.begin(), request.end(), kSplit, -1), end;
    for (; it != end; ++it) {
        std::string clause = it->str();
        // Trim and drop a trailing period.
        while (!clause.empty() && std::isspace(static_cast<unsigned char>(clause.front())))
            clause.erase(clause.begin());
        while (!clause.empty() && (std::isspace(static_cast<unsigned char>(clause.back())) ||
                                   clause.back() == '.'))
            clause.pop_back();
        if (!clause.empty()) out.push_back(clause);
    }
    // Re-attach the question mark the splitter consumed.
    std::size_t consumed = 0;
    for (auto& clause : out) {
        std::size_t pos = request.find(clause, consumed);
        if (pos != std::string::npos) {
            std::size_t after = pos + clause.size();
            if (after < request.size() && request[after] == '?') clause.push_back('?');
            consumed = pos + clause.size();
        }
    }
    return out;
}

struct BuildState {
    std::vector<Subtask> subtasks;
    bool prior_knowledge = false;

    std::optional<std::pair<int, std::string>> prev() const {
        if (subtasks.empty()) return std::nullopt;
        const Subtask& last = subtasks.back();
        return std::make_pair(last.id, last.returns.front().type.name());
    }

    int add(std::string desc, std::vector<std::string> domains, std::vector<TypedValue> args,
            const std::string& ret_type, std::vector<int> deps,
            const std::vector<std::string>& hints) {
        Subtask st;
        st.id = static_cast<int>(subtasks.size());
        if (prior_knowledge && !hints.empty()) {
            desc += " (consider tools:";
            for (std::size_t i = 0; i < hints.size(); ++i) {
                desc += (i ? ", " : " ") + hints[i];
            }
            desc += ")";
        }
        st.description = std::move(desc);
        st.domains = std::move(domains);
        st.deps = std::move(deps);
        st.args = std::move(args);
        st.returns.push_back(
            SubtaskReturn{builtin_types().parse(ret_type), GenPlaceholder{st.id, {}}});
        subtasks.push_back(std::move(st));
        return subtasks.back().id;
    }
};

TypedValue literal(const std::string& type, const std::string& value) {
    return TypedValue{builtin_types().parse(type), value, std::nullopt};
}

TypedValue reference(const std::string& type, int dep_id) {
    GenPlaceholder ph{dep_id, {}};
    return TypedValue{builtin_types().parse(type), ph.raw(), ph};
}

// Picks a source of the wanted media type: a file mentioned in the clause
// wins, otherwise the previous subtask's output when the type matches.
struct Source {
    TypedValue value;
    std::vector<int> deps;
};

std::optional<Source> pick_source(const std::vector<FileMention>& files,
                                  const std::optional<std::pair<int, std::string>>& prev,
                                  const std::string& type) {
    for (const auto& f : files) {
        if (f.type == type) return Source{literal(type, f.path), {}};
    }
    if (prev && prev->second == type) {
        return Source{reference(type, prev->first), {prev->first}};
    }
    return std::nullopt;
}

struct CondKind {
    const char* type;
    std::initializer_list<const char*> keywords;
    const char* extract_domain;
    const char* extract_hint;
    const char* generate_hint;
};

const CondKind kCondKinds[] = {
    {"segmentation", {"segmentation", "segment", "layout"}, "image-perception",
     "segment_anything", "segmentation_text_to_image"},
    {"edge", {"edge", "canny"}, "image-processing", "image_to_edge", "edge_text_to_image"},
    {"hed", {"hed"}, "image-processing", "image_to_hed", "hed_text_to_image"},
    {"scribble", {"scribble", "sketch"}, "image-processing", "image_to_scribble",
     "scribble_text_to_image"},
    {"pose", {"pose", "posture"}, "image-processing", "image_to_pose", "pose_text_to_image"},
    {"depth", {"depth"}, "image-processing", "image_to_depth", "depth_text_to_image"},
    {"normal", {"normal"}, "image-processing", "image_to_normal", "normal_text_to_image"},
    {"line", {"line drawing", "line art", " line"}, "image-processing", "image_to_line",
     "line_text_to_image"},
};

const CondKind* match_cond(const std::string& low) {
    for (const auto& kind : kCondKinds) {
        if (contains_any(low, kind.keywords)) return &kind;
    }
    return nullptr;
}

bool is_question(const std::string& low) {
    if (low.find('?') != std::string::npos) return true;
    static const char* kStarts[] = {"what", "who", "where", "when",  "why",      "how",
                                    "is ",  "are ", "does ", "do ",  "can you determine",
                                    "count", "provide the number", "determine"};
    for (const char* s : kStarts) {
        if (low.rfind(s, 0) == 0) return true;
    }
    return false;
}

// Handles one clause; returns true when it produced at least one subtask.
bool apply_rules(const std::string& clause, BuildState& state) {
    const std::string low = lower(clause);
    const auto files = find_files(clause);
    const auto prev = state.prev();

    const bool gen = contains_any(
        low, {"generate", "create", "draw", "produce", "compose", "synthesize", "make "});

    // Dubbing: needs a video plus generated audio.
    if (low.find("dub") != std::string::npos) {
        auto video = pick_source(files, prev, "video");
        if (video) {
            int audio_id = state.add(clause, {"audio-generation"}, {literal("text", clause)},
                                     "audio", {}, {"text_to_music"});
            std::vector<TypedValue> args{video->value, reference("audio", audio_id)};
            std::vector<int> deps = video->deps;
            deps.push_back(audio_id);
            state.add(clause, {"video-processing"}, std::move(args), "video", std::move(deps),
                      {"dub_video"});
            return true;
        }
    }

    // Conditioned image generation: extract the control map first when it
    // does not exist yet, then generate from it.
    if (gen && contains_any(low, {"image", "picture", "photo", "drawing", "painting",
                                  "illustration", "portrait"})) {
        if (const CondKind* cond = match_cond(low)) {
            if (prev && prev->second == cond->type && files.empty()) {
                state.add(clause, {"image-generation"},
                          {reference(cond->type, prev->first), literal("text", clause)}, "image",
                          {prev->first}, {cond->generate_hint});
                return true;
            }
            auto image = pick_source(files, prev, "image");
            if (image) {
                int cond_id =
                    state.add("extract the " + std::string(cond->type) + " from the image",
                              {cond->extract_domain}, {image->value, literal("text", clause)},
                              cond->type, image->deps, {cond->extract_hint});
                state.add(clause, {"image-generation"},
                          {reference(cond->type, cond_id), literal("text", clause)}, "image",
                          {cond_id}, {cond->generate_hint});
                return true;
            }
        }
        state.add(clause, {"image-generation"}, {literal("text", clause)}, "image", {},
                  {"text_to_image"});
        return true;
    }

    // Web page assembly from a video.
    if (contains_any(low, {"webpage", "web page", "website", "html"})) {
        auto video = pick_source(files, prev, "video");
        if (video) {
            state.add(clause, {"video-processing"}, {video->value, literal("text", clause)},
                      "html", video->deps, {"video_to_webpage"});
            return true;
        }
    }

    // Video generation.
    if ((gen && low.find("video") != std::string::npos) ||
        contains_any(low, {"animate"})) {
        auto image = pick_source(files, prev, "image");
        if (image) {
            state.add(clause, {"video-generation"}, {image->value, literal("text", clause)},
                      "video", image->deps, {"image_to_video"});
            return true;
        }
        state.add(clause, {"video-generation"}, {literal("text", clause)}, "video", {},
                  {"text_to_video"});
        return true;
    }

    // Music and speech synthesis.
    if (contains_any(low, {"music", "song", "soundtrack", "melody"})) {
        auto text = pick_source(files, prev, "text");
        std::vector<TypedValue> args{text ? text->value : literal("text", clause)};
        state.add(clause, {"audio-generation"}, std::move(args), "audio",
                  text ? text->deps : std::vector<int>{}, {"text_to_music"});
        return true;
    }
    if (contains_any(low, {"aloud", "speech", "speak", "voice over"})) {
        auto text = pick_source(files, prev, "text");
        std::vector<TypedValue> args{text ? text->value : literal("text", clause)};
        state.add(clause, {"audio-generation"}, std::move(args), "audio",
                  text ? text->deps : std::vector<int>{}, {"text_to_speech"});
        return true;
    }

    // Object removal: ground the object, lift it to a mask, then inpaint.
    if (contains_any(low, {"remove", "erase", "take away", "get rid of"})) {
        auto image = pick_source(files, prev, "image");
        if (image) {
            int box_id = state.add("locate the object to remove: " + clause,
                                   {"image-perception"}, {image->value, literal("text", clause)},
                                   "bbox", image->deps, {"visual_grounding"});
            int mask_id = state.add("lift the located object into a mask", {"image-perception"},
                                    {image->value, reference("bbox", box_id)}, "mask", {box_id},
                                    {"instance_segmentation"});
            state.add(clause, {"image-editing"},
                      {image->value, reference("mask", mask_id), literal("text", clause)},
                      "image", {mask_id}, {"image_inpainting"});
            return true;
        }
    }

    // Generic instructed edits (crop / replace / recolor / highlight ...).
    if (contains_any(low, {"crop", "replace", "change the", "turn the", "recolor",
                           "highlight", "edit"})) {
        auto image = pick_source(files, prev, "image");
        if (image) {
            state.add(clause, {"image-perception", "image-editing"},
                      {image->value, literal("text", clause)}, "image", image->deps,
                      {"text_image_editing", "image_cropping"});
            return true;
        }
    }

    // Binary mask extraction.
    if (low.find("mask") != std::string::npos) {
        auto image = pick_source(files, prev, "image");
        if (image) {
            state.add(clause, {"image-perception"}, {image->value, literal("text", clause)},
                      "mask", image->deps, {"visual_grounding", "instance_segmentation"});
            return true;
        }
    }

    // Segmentation map of the whole image (no generation involved).
    if (contains_any(low, {"segmentation", "segment"})) {
        auto image = pick_source(files, prev, "image");
        if (image) {
            state.add(clause, {"image-perception"}, {image->value, literal("text", clause)},
                      "segmentation", image->deps, {"segment_anything"});
            return true;
        }
    }

    // Control-map extraction (edge / depth / pose / ...).
    if (const CondKind* cond = match_cond(low)) {
        auto image = pick_source(files, prev, "image");
        if (image && std::string(cond->extract_domain) != "") {
            state.add(clause, {cond->extract_domain}, {image->value, literal("text", clause)},
                      cond->type, image->deps, {cond->extract_hint});
            return true;
        }
    }

    // Captioning / describing media.
    if (contains_any(low, {"caption", "describe", "elaborate", "depicted", "tell me about",
                           "what do you see"})) {
        auto video = pick_source(files, prev, "video");
        if (video && contains_any(low, {"video"})) {
            state.add(clause, {"video-perception"}, {video->value, literal("text", clause)},
                      "text", video->deps, {"video_captioning"});
            return true;
        }
        bool produced = false;
        for (const auto& f : files) {
            if (f.type != "image") continue;
            state.add(clause, {"image-perception"},
                      {literal("image", f.path), literal("text", clause)}, "text", {},
                      {"image_captioning"});
            produced = true;
        }
        if (!produced) {
            auto image = pick_source(files, prev, "image");
            if (image) {
                state.add(clause, {"image-perception"}, {image->value, literal("text", clause)},
                          "text", image->deps, {"image_captioning"});
                produced = true;
            } else if (video) {
                state.add(clause, {"video-perception"}, {video->value, literal("text", clause)},
                          "text", video->deps, {"video_captioning"});
                produced = true;
            }
        }
        if (produced) return true;
    }

    // Classification by modality.
    if (contains_any(low, {"classify", "categorize", "what kind", "genre"})) {
        if (auto audio = pick_source(files, prev, "audio")) {
            state.add(clause, {"audio-perception"}, {audio->value}, "category", audio->deps,
                      {"audio_classification"});
            return true;
        }
        if (auto video = pick_source(files, prev, "video")) {
            state.add(clause, {"video-perception"}, {video->value}, "category", video->deps,
                      {"video_classification"});
            return true;
        }
        if (auto image = pick_source(files, prev, "image")) {
            state.add(clause, {"image-perception"}, {image->value}, "category", image->deps,
                      {"image_classification"});
            return true;
        }
    }

    // Summaries, tags, sentiment over text.
    if (contains_any(low, {"summarize", "summary", "tl;dr"})) {
        auto text = pick_source(files, prev, "text");
        state.add(clause, {"natural-language-processing"},
                  {text ? text->value : literal("text", clause)}, "text",
                  text ? text->deps : std::vector<int>{}, {"summarization"});
        return true;
    }
    if (contains_any(low, {"hashtag", "tags", "keywords"})) {
        auto text = pick_source(files, prev, "text");
        state.add(clause, {"natural-language-processing"},
                  {text ? text->value : literal("text", clause)}, "tags",
                  text ? text->deps : std::vector<int>{}, {"text_to_tags"});
        return true;
    }
    if (contains_any(low, {"sentiment", "mood of"})) {
        auto text = pick_source(files, prev, "text");
        state.add(clause, {"natural-language-processing"},
                  {text ? text->value : literal("text", clause)}, "category",
                  text ? text->deps : std::vector<int>{}, {"sentiment_analysis"});
        return true;
    }

    // Questions, possibly about one or more images.
    if (is_question(low)) {
        bool produced = false;
        for (const auto& f : files) {
            if (f.type != "image") continue;
            state.add(clause, {"question-answering"},
                      {literal("image", f.path), literal("text", clause)}, "text", {},
                      {"image_question_answering"});
            produced = true;
        }
        if (!produced) {
            if (auto image = pick_source(files, prev, "image")) {
                state.add(clause, {"question-answering"}, {image->value, literal("text", clause)},
                          "text", image->deps, {"image_question_answering"});
            } else {
                state.add(clause, {"question-answering"}, {literal("text", clause)}, "text", {},
                          {"question_answering"});
            }
        }
        return true;
    }

    return false;
}

}  // namespace

std::string KeywordDecomposer::decompose_raw(const std::string& request) {
    BuildState state;
    state.prior_knowledge = prior_knowledge_;
    for (const auto& clause : split_clauses(request)) {
        apply_rules(clause, state);
    }
    DecompositionResult result;
    result.subtasks = std::move(state.subtasks);
    result.source_request = request;
    return serialize_decomposition(result);
}

}  // namespace toolflow
