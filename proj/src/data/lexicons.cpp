#include "data/lexicons.hpp"

#include <algorithm>

#include "common/errors.hpp"
#include "common/fsio.hpp"

namespace seedstab::data {

const std::vector<std::string>& LexiconSet::get(const std::string& name) const {
    auto it = lists.find(name);
    if (it == lists.end())
        throw ConfigError("lexicon \"" + name + "\" not found");
    if (it->second.empty())
        throw ConfigError("lexicon \"" + name + "\" is empty");
    return it->second;
}

LexiconSet LexiconSet::builtin() {
    LexiconSet lex;

    lex.lists["positive_adjectives"] = {
        "great", "wonderful", "fantastic", "amazing", "excellent", "brilliant", "superb",
        "delightful", "charming", "captivating", "stunning", "marvelous", "outstanding",
        "remarkable", "enjoyable", "satisfying", "impressive", "touching", "inspiring",
        "uplifting", "engaging", "gripping", "thrilling", "dazzling", "magnificent",
        "memorable", "refreshing", "clever", "witty", "beautiful", "lovely", "splendid",
        "masterful", "riveting", "heartwarming", "exhilarating", "polished", "vibrant",
        "graceful", "sublime"};

    lex.lists["negative_adjectives"] = {
        "terrible", "awful", "horrible", "dreadful", "atrocious", "abysmal", "appalling",
        "disappointing", "boring", "tedious", "dull", "bland", "lifeless", "forgettable",
        "mediocre", "shallow", "clumsy", "sloppy", "messy", "incoherent", "pointless",
        "painful", "unbearable", "irritating", "annoying", "grating", "lazy", "uninspired",
        "stale", "predictable", "hollow", "vapid", "dismal", "wretched", "lousy",
        "pathetic", "cheap", "tiresome", "insufferable", "joyless"};

    lex.lists["positive_verbs_present"] = {
        "love", "adore", "enjoy", "admire", "cherish", "treasure",
        "recommend", "applaud", "savor", "appreciate", "celebrate", "relish"};
    lex.lists["positive_verbs_past"] = {
        "loved", "adored", "enjoyed", "admired", "cherished", "treasured",
        "recommended", "applauded", "savored", "appreciated", "celebrated", "relished"};
    lex.lists["negative_verbs_present"] = {
        "hate", "despise", "loathe", "detest", "dread", "resent",
        "dislike", "regret", "deplore", "abhor", "dismiss", "lament"};
    lex.lists["negative_verbs_past"] = {
        "hated", "despised", "loathed", "detested", "dreaded", "resented",
        "disliked", "regretted", "deplored", "abhorred", "dismissed", "lamented"};

    // Pools for the single-word label checks.
    lex.lists["positive_words"] = {
        "beautiful", "brilliant", "enjoyable", "wonderful", "amazing", "excellent",
        "superb", "delightful", "fantastic", "charming", "stunning", "marvelous",
        "outstanding", "remarkable", "impressive", "touching", "inspiring", "uplifting",
        "engaging", "thrilling", "dazzling", "magnificent", "memorable", "refreshing",
        "witty", "lovely", "enjoyed", "loved", "admired", "cherished"};
    lex.lists["negative_words"] = {
        "hate", "disliked", "dreaded", "terrible", "awful", "horrible", "dreadful",
        "boring", "tedious", "dull", "bland", "pointless", "painful", "annoying",
        "lazy", "stale", "hollow", "dismal", "lousy", "pathetic"};

    lex.lists["movie_nouns"] = {
        "movie", "film", "director", "cast", "plot", "screenplay", "soundtrack", "acting"};

    lex.lists["neutral_words"] = {
        "that", "this", "the", "a", "an", "of", "in", "on", "with", "for"};

    lex.lists["genres"] = {"horror", "comedy", "drama", "thriller", "romance", "documentary"};

    // Sentiments that fit a genre read positive, misfits read negative.
    lex.lists["genre_fit_horror"] = {
        "terrifying", "scary", "frightening", "chilling", "creepy", "spooky"};
    lex.lists["genre_misfit_horror"] = {
        "calming", "soothing", "gentle", "cozy", "tame", "reassuring"};
    lex.lists["genre_fit_comedy"] = {
        "hilarious", "funny", "silly", "goofy", "amusing", "playful"};
    lex.lists["genre_misfit_comedy"] = {
        "somber", "grim", "humorless", "serious", "dreary", "leaden"};
    lex.lists["genre_fit_drama"] = {
        "moving", "powerful", "emotional", "profound", "intense", "poignant"};
    lex.lists["genre_misfit_drama"] = {
        "funny", "silly", "goofy", "laughable", "flippant", "cartoonish"};
    lex.lists["genre_fit_thriller"] = {
        "tense", "suspenseful", "gripping", "explosive", "relentless", "electrifying"};
    lex.lists["genre_misfit_thriller"] = {
        "sluggish", "slow", "tame", "meandering", "flat", "listless"};
    lex.lists["genre_fit_romance"] = {
        "sweet", "tender", "passionate", "heartwarming", "romantic", "intimate"};
    lex.lists["genre_misfit_romance"] = {
        "cold", "clinical", "detached", "loveless", "sterile", "distant"};
    lex.lists["genre_fit_documentary"] = {
        "informative", "insightful", "enlightening", "educational", "thorough", "factual"};
    lex.lists["genre_misfit_documentary"] = {
        "misleading", "inaccurate", "biased", "sensationalized", "evasive", "superficial"};

    lex.lists["industries"] = {
        "Hollywood", "Bollywood", "Nollywood", "Tollywood", "Kollywood", "Mollywood",
        "Lollywood", "Dhallywood", "Sandalwood", "Hallyuwood", "Chollywood", "Pollywood",
        "Wellywood", "Aussiewood"};

    lex.lists["hedges"] = {
        "to be honest", "in my opinion", "frankly speaking",
        "if you ask me", "all things considered", "truth be told"};

    lex.lists["first_names"] = {
        "Alice", "Adam", "Aaron", "Abigail", "Aiden", "Amber", "Amelia", "Amy",
        "Andrea", "Andrew", "Angela", "Anna", "Anthony", "Ashley", "Austin", "Bella",
        "Benjamin", "Bethany", "Blake", "Brandon", "Brenda", "Brian", "Brooke", "Caleb",
        "Cameron", "Carla", "Carlos", "Caroline", "Carter", "Cassandra", "Catherine",
        "Charles", "Charlotte", "Chloe", "Christian", "Christina", "Claire", "Clara",
        "Cole", "Colin", "Connor", "Courtney", "Craig", "Crystal", "Daniel", "Danielle",
        "David", "Dean", "Deborah", "Dennis", "Derek", "Diana", "Diego", "Dominic",
        "Donna", "Dorothy", "Douglas", "Dylan", "Edward", "Elaine", "Eleanor", "Elena",
        "Elijah", "Elizabeth", "Ella", "Emily", "Emma", "Eric", "Erica", "Ethan",
        "Eugene", "Evan", "Evelyn", "Felix", "Fiona", "Frances", "Frank", "Gabriel",
        "Gabriella", "Gavin", "George", "Georgia", "Gerald", "Gloria", "Grace", "Grant",
        "Gregory", "Hannah", "Harold", "Harper", "Harrison", "Hazel", "Heather", "Hector",
        "Helen", "Henry", "Holly", "Hugo", "Ian", "Iris", "Isaac", "Isabel", "Isabella",
        "Ivan", "Jack", "Jacob", "Jade", "James", "Jasmine", "Jason", "Jennifer",
        "Jeremy", "Jessica", "Joan", "Joanna", "Joel", "John", "Jonah", "Jordan",
        "Joseph", "Joshua", "Joyce", "Julia", "Julian", "Justin", "Karen", "Kate",
        "Katherine", "Kathleen", "Kayla", "Keith", "Kelly", "Kevin", "Kimberly", "Kyle",
        "Laura", "Lauren", "Leah", "Leo", "Leonard", "Liam", "Lily", "Linda", "Logan",
        "Lucas", "Lucy", "Luke", "Lydia", "Madison", "Marcus", "Margaret", "Maria",
        "Marie", "Marissa", "Martin", "Mason", "Matthew", "Maya", "Megan", "Melanie",
        "Melissa", "Michael", "Michelle", "Miles", "Molly", "Monica", "Morgan", "Nancy",
        "Natalie", "Nathan", "Nicholas", "Nicole", "Noah", "Nolan", "Nora", "Oliver",
        "Olivia", "Oscar", "Owen", "Paige", "Pamela", "Patricia", "Patrick", "Paul",
        "Paula", "Penelope", "Peter", "Philip", "Phoebe", "Quentin", "Quinn", "Rachel",
        "Raymond", "Rebecca", "Richard", "Riley", "Robert", "Roger", "Rose", "Ruby",
        "Russell", "Ruth", "Ryan", "Sabrina", "Samantha", "Samuel", "Sandra", "Sarah",
        "Scott", "Sean", "Sebastian", "Serena", "Seth", "Sharon", "Sierra", "Simon",
        "Sophia", "Spencer", "Stella", "Stephen", "Steven", "Susan", "Sylvia", "Tanya",
        "Teresa", "Theodore", "Thomas", "Timothy", "Tina", "Travis", "Tristan", "Tyler",
        "Valerie", "Vanessa", "Victor", "Victoria", "Vincent", "Violet", "Virginia",
        "Walter", "Wendy", "Wesley", "William", "Zachary", "Zoe"};

    lex.lists["positive_phrases"] = {
        "I loved every minute", "what a delightful surprise", "truly a wonderful experience",
        "the cast was fantastic", "an absolute joy to watch", "it was thoroughly enjoyable",
        "a remarkable piece of cinema", "the screenplay sparkles", "such a charming film",
        "easily a new favorite"};
    lex.lists["negative_phrases"] = {
        "I hated every minute", "what a dreadful mess", "truly a terrible experience",
        "the cast was awful", "an absolute chore to watch", "it was thoroughly boring",
        "a pointless piece of cinema", "the screenplay is dismal", "such a tedious film"};

    return lex;
}

void LexiconSet::save_dir(const std::filesystem::path& dir) const {
    for (const auto& [name, entries] : lists)
        write_lines(dir / (name + ".txt"), entries);
}

LexiconSet LexiconSet::load_dir(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir))
        throw ConfigError("lexicon directory not found: " + dir.string());
    LexiconSet lex;
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".txt")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
        auto entries = read_lines(file);
        while (!entries.empty() && entries.back().empty()) entries.pop_back();
        lex.lists[file.stem().string()] = std::move(entries);
    }
    if (lex.lists.empty())
        throw ConfigError("lexicon directory has no .txt lists: " + dir.string());
    return lex;
}

}  // namespace seedstab::data
